#include "gct/character_table.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace gct {

namespace {

using Row = std::vector<uint64_t>;     // vector over GF(p)
using Matrix = std::vector<Row>;

struct Fp {
  uint64_t p;
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t inv(uint64_t a) const { return mod_pow(a, p - 2, p); }
  uint64_t pow(uint64_t a, uint64_t e) const { return mod_pow(a, e, p); }
};

uint64_t dixon_prime(uint64_t order, uint64_t exponent) {
  uint64_t root = 0;
  is_perfect_square(order, &root);
  uint64_t bound = 2 * (root * root == order ? root : root + 1);
  uint64_t p = exponent + 1;
  while (p <= bound || !is_prime_u64(p) || (p - 1) % exponent != 0) ++p;
  return p;
}

uint64_t primitive_root(uint64_t p) {
  auto fac = factorize(p - 1);
  for (uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, a] : fac)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(ErrorKind::Internal, "no primitive root found");
}

// Row-reduce in place; returns pivot columns. Rows normalized to leading 1.
std::vector<size_t> rref(Matrix& m, const Fp& fp) {
  std::vector<size_t> pivots;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    uint64_t inv = fp.inv(m[r][c]);
    for (size_t j = c; j < cols; ++j) m[r][j] = fp.mul(m[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      uint64_t f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = fp.sub(m[i][j], fp.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Kernel basis of a square matrix (as rows of the returned matrix).
Matrix kernel_basis(Matrix m, const Fp& fp) {
  size_t n = m.size();
  auto pivots = rref(m, fp);
  std::vector<char> is_pivot(n, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  Matrix out;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Row v(n, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = fp.neg(m[r][c]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via Hessenberg reduction; coefficients of
// lambda^0..lambda^d for det(lambda I - M).
Row char_poly(Matrix h, const Fp& fp) {
  size_t d = h.size();
  // reduce to upper Hessenberg by similarity transforms
  for (size_t c = 0; c + 2 < d; ++c) {
    size_t piv = c + 1;
    while (piv < d && h[piv][c] == 0) ++piv;
    if (piv == d) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (size_t i = 0; i < d; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    uint64_t inv = fp.inv(h[c + 1][c]);
    for (size_t i = c + 2; i < d; ++i) {
      if (h[i][c] == 0) continue;
      uint64_t f = fp.mul(h[i][c], inv);
      for (size_t j = 0; j < d; ++j) h[i][j] = fp.sub(h[i][j], fp.mul(f, h[c + 1][j]));
      for (size_t j = 0; j < d; ++j) h[j][c + 1] = fp.add(h[j][c + 1], fp.mul(f, h[j][i]));
    }
  }
  // p_m = (lambda - h[m-1][m-1]) p_{m-1}
  //       - sum_i h[i-1][m-1] (prod_{j=i..m-2} h[j+1][j]) p_{i-1}
  std::vector<Row> p(d + 1);
  p[0] = {1};
  for (size_t m = 1; m <= d; ++m) {
    Row cur(m + 1, 0);
    for (size_t t = 0; t < m; ++t) {
      cur[t + 1] = fp.add(cur[t + 1], p[m - 1][t]);
      cur[t] = fp.sub(cur[t], fp.mul(h[m - 1][m - 1], p[m - 1][t]));
    }
    uint64_t subprod = 1;
    for (size_t i = m - 1; i >= 1; --i) {
      subprod = fp.mul(subprod, h[i][i - 1]);
      if (subprod == 0) break;
      uint64_t coef = fp.mul(h[i - 1][m - 1], subprod);
      if (coef == 0) continue;
      for (size_t t = 0; t < i; ++t) cur[t] = fp.sub(cur[t], fp.mul(coef, p[i - 1][t]));
    }
    p[m] = std::move(cur);
  }
  return p[d];
}

std::vector<uint64_t> poly_roots(const Row& poly, const Fp& fp) {
  std::vector<uint64_t> roots;
  for (uint64_t x = 0; x < fp.p; ++x) {
    uint64_t acc = 0;
    for (size_t i = poly.size(); i-- > 0;) acc = fp.add(fp.mul(acc, x), poly[i]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// A subspace of GF(p)^k given by an RREF basis, invariant under all class
// matrices applied so far.
struct Subspace {
  Matrix basis;
  std::vector<size_t> pivots;
};

Subspace make_subspace(Matrix rows, const Fp& fp) {
  Subspace s;
  s.pivots = rref(rows, fp);
  s.basis = std::move(rows);
  return s;
}

// coordinates of v in the RREF basis; v must lie in the span
Row coords_in(const Subspace& s, Row v, const Fp& fp) {
  Row out(s.basis.size(), 0);
  for (size_t r = 0; r < s.basis.size(); ++r) {
    uint64_t c = v[s.pivots[r]];
    out[r] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = fp.sub(v[j], fp.mul(c, s.basis[r][j]));
  }
  for (uint64_t x : v)
    if (x != 0) fail(ErrorKind::Internal, "eigenvector left the invariant subspace");
  return out;
}

// split s under matrix M (acting on column vectors, all of GF(p)^k)
std::vector<Subspace> split_subspace(const Subspace& s, const Matrix& m, const Fp& fp) {
  size_t k = m.size(), d = s.basis.size();
  // restriction R: coords of M * b_i
  Matrix r(d, Row(d, 0));
  for (size_t i = 0; i < d; ++i) {
    Row mb(k, 0);
    for (size_t row = 0; row < k; ++row) {
      uint64_t acc = 0;
      for (size_t col = 0; col < k; ++col)
        acc = fp.add(acc, fp.mul(m[row][col], s.basis[i][col]));
      mb[row] = acc;
    }
    Row co = coords_in(s, std::move(mb), fp);
    for (size_t j = 0; j < d; ++j) r[j][i] = co[j];
  }
  auto roots = poly_roots(char_poly(r, fp), fp);
  if (roots.size() <= 1) return {};  // nothing to split
  std::vector<Subspace> out;
  size_t total = 0;
  for (uint64_t lam : roots) {
    Matrix shifted = r;
    for (size_t i = 0; i < d; ++i) shifted[i][i] = fp.sub(shifted[i][i], lam);
    Matrix ker = kernel_basis(std::move(shifted), fp);
    if (ker.empty()) continue;
    Matrix global;
    for (const auto& u : ker) {
      Row v(k, 0);
      for (size_t i = 0; i < d; ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < k; ++j)
          v[j] = fp.add(v[j], fp.mul(u[i], s.basis[i][j]));
      }
      global.push_back(std::move(v));
    }
    total += global.size();
    out.push_back(make_subspace(std::move(global), fp));
  }
  if (total != d)
    fail(ErrorKind::Internal, "class matrix restriction did not split completely");
  return out;
}

}  // namespace

std::vector<std::vector<uint64_t>> class_matrix(const PermGroup& g,
                                                const ClassData& cd, size_t i) {
  size_t k = cd.count();
  std::vector<std::vector<uint64_t>> m(k, std::vector<uint64_t>(k, 0));
  std::vector<std::vector<int>> members(k);
  for (size_t e = 0; e < g.order(); ++e)
    members[static_cast<size_t>(cd.class_of[e])].push_back(static_cast<int>(e));
  for (size_t j = 0; j < k; ++j) {
    int rep = cd.representatives[j];
    for (int x : members[i]) m[j][static_cast<size_t>(cd.class_of[static_cast<size_t>(g.mul(x, rep))])]++;
  }
  return m;
}

CharacterTable character_table(std::shared_ptr<const PermGroup> g, uint64_t seed) {
  CharacterTable t;
  t.group = g;
  t.classes = conjugacy_classes(*g);
  t.exponent = g->exponent();
  t.seed = seed;
  size_t k = t.classes.count();
  uint64_t order = g->order();

  Fp fp{dixon_prime(order, t.exponent)};
  t.dixon_prime = fp.p;
  uint64_t zE = fp.pow(primitive_root(fp.p), (fp.p - 1) / t.exponent);

  // cache class matrices mod p as they get used
  std::vector<Matrix> mats(k);
  auto matrix_mod_p = [&](size_t i) -> const Matrix& {
    if (mats[i].empty()) {
      auto raw = class_matrix(*g, t.classes, i);
      Matrix m(k, Row(k));
      for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) m[a][b] = raw[a][b] % fp.p;
      mats[i] = std::move(m);
    }
    return mats[i];
  };

  std::vector<Subspace> spaces;
  {
    Matrix full(k, Row(k, 0));
    for (size_t i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(make_subspace(std::move(full), fp));
  }
  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(),
                       [](const Subspace& s) { return s.basis.size() == 1; });
  };
  auto apply_matrix = [&](const Matrix& m) {
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      auto parts = split_subspace(s, m, fp);
      if (parts.empty())
        next.push_back(std::move(s));
      else
        for (auto& p : parts) next.push_back(std::move(p));
    }
    spaces = std::move(next);
  };

  for (size_t i = 1; i < k && !all_split(); ++i) apply_matrix(matrix_mod_p(i));
  // deterministic single matrices failed to separate; seeded combinations
  std::mt19937_64 rng(seed);
  for (int tries = 0; !all_split() && tries < 64; ++tries) {
    Matrix m(k, Row(k, 0));
    for (size_t i = 1; i < k; ++i) {
      uint64_t c = rng() % fp.p;
      if (c == 0) continue;
      const Matrix& mi = matrix_mod_p(i);
      for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b) m[a][b] = fp.add(m[a][b], fp.mul(c, mi[a][b]));
    }
    apply_matrix(m);
  }
  if (!all_split()) fail(ErrorKind::Internal, "eigenspace splitting did not converge");

  auto inv_class = power_class_map(*g, t.classes, -1);

  // per eigenvector: normalize, recover the degree, lift values
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& s : spaces) {
    const Row& v = s.basis[0];
    if (v[0] == 0) fail(ErrorKind::Internal, "eigenvector vanishes at the identity class");
    uint64_t inv0 = fp.inv(v[0]);
    Row w(k);
    for (size_t l = 0; l < k; ++l) w[l] = fp.mul(v[l], inv0);  // chi(g_l)/chi(1)

    uint64_t denom = 0;
    for (size_t l = 0; l < k; ++l)
      denom = fp.add(denom, fp.mul(t.classes.sizes[l] % fp.p,
                                   fp.mul(w[l], w[static_cast<size_t>(inv_class[l])])));
    if (denom == 0) fail(ErrorKind::Internal, "degree denominator vanished");
    uint64_t d2 = fp.mul(order % fp.p, fp.inv(denom));
    uint64_t degree = 0;
    for (uint64_t c = 1; c * c <= order; ++c)
      if (fp.mul(c % fp.p, c % fp.p) == d2) {
        degree = c;
        break;
      }
    if (degree == 0) fail(ErrorKind::Internal, "no integer degree matches");

    Row chi(k);
    for (size_t l = 0; l < k; ++l) chi[l] = fp.mul(w[l], degree % fp.p);

    std::vector<Cyclotomic> row(k);
    for (size_t l = 0; l < k; ++l) {
      uint64_t o = t.classes.element_orders[l];
      uint64_t zo = fp.pow(zE, t.exponent / o);
      uint64_t oinv = fp.inv(o % fp.p);
      // chi(g^j) for j = 0..o-1 through the power map on classes
      std::vector<uint64_t> pow_vals(o);
      for (uint64_t j = 0; j < o; ++j) {
        int cls = t.classes.class_of[static_cast<size_t>(
            g->power(t.classes.representatives[l], static_cast<long>(j)))];
        pow_vals[j] = chi[static_cast<size_t>(cls)];
      }
      Cyclotomic val(0L);
      uint64_t mult_sum = 0;
      for (uint64_t mexp = 0; mexp < o; ++mexp) {
        uint64_t acc = 0;
        for (uint64_t j = 0; j < o; ++j) {
          uint64_t zpow = fp.pow(zo, (o - (j * mexp) % o) % o);
          acc = fp.add(acc, fp.mul(pow_vals[j], zpow));
        }
        uint64_t mult = fp.mul(acc, oinv);  // multiplicity of zeta_o^mexp
        if (mult > degree)
          fail(ErrorKind::Internal, "eigenvalue multiplicity exceeds the degree");
        mult_sum += mult;
        if (mult)
          val += Cyclotomic(static_cast<long>(mult)) *
                 Cyclotomic::zeta(static_cast<unsigned>(o), static_cast<long>(mexp));
      }
      if (mult_sum != degree)
        fail(ErrorKind::Internal, "eigenvalue multiplicities do not sum to the degree");
      row[l] = std::move(val);
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    auto da = a[0].rational_value(), db = b[0].rational_value();
    if (*da != *db) return *da < *db;
    for (size_t j = 0; j < a.size(); ++j) {
      int c = Cyclotomic::compare(a[j], b[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i] == rows[i + 1]) fail(ErrorKind::Internal, "duplicate character rows");

  t.values = std::move(rows);
  t.degrees.resize(k);
  for (size_t i = 0; i < k; ++i) t.degrees[i] = static_cast<uint64_t>(to_int64(*t.values[i][0].rational_value()));
  return t;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
  OrthogonalityReport rep;
  size_t k = t.k();
  Cyclotomic order(static_cast<long>(t.group->order()));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      Cyclotomic acc(0L);
      for (size_t l = 0; l < k; ++l)
        acc += Cyclotomic(static_cast<long>(t.classes.sizes[l])) * t.values[i][l] *
               t.values[j][l].conjugate();
      Cyclotomic want = (i == j) ? order : Cyclotomic(0L);
      if (!(acc == want)) {
        rep.pass = false;
        rep.detail = "first orthogonality fails at rows (" + std::to_string(i + 1) +
                     "," + std::to_string(j + 1) + ")";
        return rep;
      }
    }
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a; b < k; ++b) {
      Cyclotomic acc(0L);
      for (size_t i = 0; i < k; ++i)
        acc += t.values[i][a] * t.values[i][b].conjugate();
      Cyclotomic want(0L);
      if (a == b)
        want = Cyclotomic(Rational(static_cast<long>(t.group->order()),
                                   static_cast<long>(t.classes.sizes[a])));
      if (!(acc == want)) {
        rep.pass = false;
        rep.detail = "second orthogonality fails at columns (" + std::to_string(a + 1) +
                     "," + std::to_string(b + 1) + ")";
        return rep;
      }
    }
  return rep;
}

Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m) {
  size_t n = m.size();
  Cyclotomic det(1L);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return Cyclotomic(0L);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Cyclotomic inv = m[c][c].inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<Cyclotomic> solve_row_combination(
    const std::vector<std::vector<Cyclotomic>>& rows,
    const std::vector<Cyclotomic>& target) {
  size_t n = rows.size();
  // augmented system A^T x = b
  std::vector<std::vector<Cyclotomic>> m(n, std::vector<Cyclotomic>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = rows[j][i];
    m[i][n] = target[i];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) fail(ErrorKind::Internal, "singular system in solve_row_combination");
    std::swap(m[piv], m[c]);
    Cyclotomic inv = m[c][c].inverse();
    for (size_t j = c; j <= n; ++j) m[c][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Cyclotomic f = m[i][c];
      for (size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Cyclotomic> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

}  // namespace gct
