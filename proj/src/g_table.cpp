#include "gct/g_table.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gct {

EquivClasses equivalence_classes(const CharacterTable& t, const NormalSubgroup& n) {
  size_t k = t.k();
  EquivClasses ec;
  ec.block_of.assign(k, -1);
  ec.ratio_to_rep.assign(k, Rational(1));
  for (size_t i = 0; i < k; ++i) {
    if (ec.block_of[i] >= 0) continue;
    int block = static_cast<int>(ec.blocks.size());
    std::vector<int> rows{static_cast<int>(i)};
    ec.block_of[i] = block;
    for (size_t j = i + 1; j < k; ++j) {
      if (ec.block_of[j] >= 0) continue;
      bool proportional = true;
      Cyclotomic di(static_cast<long>(t.degrees[i])), dj(static_cast<long>(t.degrees[j]));
      for (int c : n.class_indices) {
        if (t.values[i][static_cast<size_t>(c)] * dj == t.values[j][static_cast<size_t>(c)] * di)
          continue;
        proportional = false;
        break;
      }
      if (proportional) {
        ec.block_of[j] = block;
        rows.push_back(static_cast<int>(j));
        ec.ratio_to_rep[j] = Rational(static_cast<long>(t.degrees[j]),
                                      static_cast<long>(t.degrees[i]));
        ec.ratio_to_rep[j].canonicalize();
      }
    }
    ec.representative.push_back(static_cast<int>(i));
    ec.blocks.push_back(std::move(rows));
  }
  if (ec.blocks.size() != n.class_indices.size())
    fail(ErrorKind::Internal,
         "block count differs from the number of G-classes in N");
  return ec;
}

GCharTable g_character_table(const CharacterTable& t, const NormalSubgroup& n,
                             const EquivClasses& ec,
                             const std::vector<int>* explicit_reps) {
  GCharTable x;
  x.column_classes = n.class_indices;
  x.normal_id = n.id;
  x.normal_order = n.order;
  x.group_order = t.group->order();
  x.row_chars = ec.representative;
  if (explicit_reps) {
    if (explicit_reps->size() != ec.blocks.size())
      fail(ErrorKind::BadRepresentative,
           "need exactly one representative per equivalence class");
    std::vector<int> chosen(ec.blocks.size(), -1);
    for (int r : *explicit_reps) {
      if (r < 0 || static_cast<size_t>(r) >= t.k())
        fail(ErrorKind::BadRepresentative, "row index out of range");
      int b = ec.block_of[static_cast<size_t>(r)];
      if (chosen[static_cast<size_t>(b)] >= 0)
        fail(ErrorKind::BadRepresentative,
             "two representatives fall in one equivalence class");
      chosen[static_cast<size_t>(b)] = r;
    }
    x.row_chars = chosen;
  }
  for (int c : x.column_classes) x.D.push_back(t.classes.sizes[static_cast<size_t>(c)]);
  for (int r : x.row_chars) {
    std::vector<Cyclotomic> row;
    for (int c : x.column_classes) row.push_back(t.values[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    x.X.push_back(std::move(row));
  }
  return x;
}

ParamSolutionSet lambda_and_relations(GCharTable& x) {
  size_t k = x.k();
  ParamSolutionSet out;
  x.lambda.assign(k, Integer(0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      Cyclotomic acc(0L);
      for (size_t c = 0; c < k; ++c)
        acc += Cyclotomic(static_cast<long>(x.D[c])) * x.X[i][c] * x.X[j][c].conjugate();
      if (i != j) {
        if (!acc.is_zero())
          fail(ErrorKind::NonIntegralRelation, "Lambda has a nonzero off-diagonal entry");
        continue;
      }
      auto r = acc.rational_value();
      if (!r || !is_integral(*r) || *r <= 0)
        fail(ErrorKind::NonIntegralRelation, "lambda_i is not a positive integer");
      x.lambda[i] = r->get_num();
      if (x.lambda[i] % Integer(static_cast<long>(x.normal_order)) != 0)
        fail(ErrorKind::NonIntegralRelation, "lambda_i is not divisible by |N|");
    }
  }
  Integer order_n(static_cast<long>(x.normal_order));
  for (size_t i = 0; i < k; ++i) {
    BlockRelations rel;
    rel.chi_degree = static_cast<uint64_t>(to_int64(*x.X[i][0].rational_value()));
    Integer chi(static_cast<long>(rel.chi_degree));
    rel.A = x.lambda[i] / order_n;
    Integer bnum = order_n * chi * chi;
    if (bnum % x.lambda[i] != 0)
      fail(ErrorKind::NonIntegralRelation, "B_i is not an integer");
    rel.B = bnum / x.lambda[i];
    rel.C = Rational(order_n * chi) / Rational(x.lambda[i]);
    rel.C.canonicalize();
    if (rel.A * rel.B != chi * chi)
      fail(ErrorKind::NonIntegralRelation, "A_i * B_i != chi(1)^2");
    out.relations.push_back(std::move(rel));
  }
  return out;
}

bool restriction_irreducible(const GCharTable& x, size_t block) {
  if (x.lambda.size() != x.k())
    fail(ErrorKind::Internal, "lambda not computed yet");
  return x.lambda[block] == Integer(static_cast<long>(x.normal_order));
}

ParamSolutionSet infer_parameters(const GCharTable& x, ParamSolutionSet rel) {
  uint64_t index = x.group_order / x.normal_order;
  rel.hall_applied = gcd_u64(x.normal_order, index) == 1;
  rel.solutions.clear();
  rel.squarefree_applied.clear();
  rel.determined.clear();
  for (const auto& r : rel.relations) {
    uint64_t A = static_cast<uint64_t>(to_int64(r.A));
    uint64_t B = static_cast<uint64_t>(to_int64(r.B));
    std::vector<ParamTriple> sols;
    for (uint64_t t : divisors(gcd_u64(A, B))) {
      uint64_t e2 = A / t, d2 = B / t, e, d;
      if (!is_perfect_square(e2, &e) || !is_perfect_square(d2, &d)) continue;
      if (index % t || x.normal_order % d) continue;
      if (e * t * d != r.chi_degree)
        fail(ErrorKind::Internal, "solution violates e*t*d = chi(1)");
      sols.push_back({e, t, d});
    }
    if (sols.empty())
      fail(ErrorKind::NoSolution, "no (e,t,d) solution for a block");
    std::sort(sols.begin(), sols.end());
    rel.squarefree_applied.push_back(is_squarefree(A) || is_squarefree(B));
    rel.determined.push_back(sols.size() == 1);
    rel.solutions.push_back(std::move(sols));
  }
  return rel;
}

InvariantTable invariant_table(const GCharTable& x, const SubIrrData& oracle) {
  size_t k = x.k();
  if (oracle.orbits.size() != k)
    fail(ErrorKind::BlockOrbitMismatch, "orbit count differs from block count");

  // orbit sums of Irr(N) rows evaluated on the G-classes of N; the value is
  // constant across the N-classes fusing into one G-class
  std::vector<std::vector<Cyclotomic>> orbit_rows(k, std::vector<Cyclotomic>(k));
  const ClassData& ncd = oracle.table_n.classes;
  for (size_t o = 0; o < k; ++o) {
    for (size_t col = 0; col < k; ++col) {
      int gclass = x.column_classes[col];
      Cyclotomic val;
      bool found = false;
      for (size_t nc = 0; nc < ncd.count(); ++nc) {
        if (oracle.g_class_of_n_class[nc] != gclass) continue;
        Cyclotomic here(0L);
        for (int row : oracle.orbits[o]) here += oracle.table_n.values[static_cast<size_t>(row)][nc];
        if (!found) {
          val = here;
          found = true;
        } else if (!(val == here)) {
          fail(ErrorKind::Internal, "orbit sum is not constant on a G-class");
        }
      }
      if (!found) fail(ErrorKind::Internal, "G-class contains no N-class");
      orbit_rows[o][col] = std::move(val);
    }
  }

  InvariantTable out;
  out.Xhat.resize(k);
  out.e.resize(k);
  out.orbit_for_block.assign(k, -1);
  std::vector<uint8_t> used(k, 0);
  for (size_t b = 0; b < k; ++b) {
    // X row b must be an integer multiple of exactly one orbit row
    for (size_t o = 0; o < k; ++o) {
      if (used[o]) continue;
      uint64_t theta1 = oracle.t[o] * oracle.theta_degrees[o];
      uint64_t chi1 = static_cast<uint64_t>(to_int64(*x.X[b][0].rational_value()));
      if (chi1 % theta1) continue;
      Cyclotomic e_cand(static_cast<long>(chi1 / theta1));
      bool match = true;
      for (size_t col = 0; col < k; ++col)
        if (!(x.X[b][col] == e_cand * orbit_rows[o][col])) {
          match = false;
          break;
        }
      if (!match) continue;
      out.orbit_for_block[b] = static_cast<int>(o);
      out.e[b] = static_cast<uint64_t>(to_int64(*e_cand.rational_value()));
      out.Xhat[b] = orbit_rows[o];
      used[o] = 1;
      break;
    }
    if (out.orbit_for_block[b] < 0)
      fail(ErrorKind::BlockOrbitMismatch,
           "no orbit matches equivalence class " + std::to_string(b + 1));
  }
  for (size_t b = 0; b < k; ++b) {
    size_t o = static_cast<size_t>(out.orbit_for_block[b]);
    Cyclotomic want(static_cast<long>(oracle.t[o] * oracle.theta_degrees[o]));
    if (!(out.Xhat[b][0] == want))
      fail(ErrorKind::Internal, "Xhat identity column differs from t_i * theta_i(1)");
  }
  if (determinant(out.Xhat).is_zero())
    fail(ErrorKind::Internal, "G-invariant table is singular");
  return out;
}

CheckReport basis_check_cfGN(const InvariantTable& xhat, const GCharTable& x,
                             uint64_t seed) {
  CheckReport rep;
  size_t k = x.k();
  rep.add("xhat-nonsingular", !determinant(xhat.Xhat).is_zero());

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  // random rational G-invariant class functions solve uniquely
  bool solved = true;
  for (int trial = 0; trial < 3 && solved; ++trial) {
    std::vector<Cyclotomic> f(k);
    for (size_t c = 0; c < k; ++c) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = 1 + static_cast<long>(rng() % 4);
      Rational q(num, den);
      q.canonicalize();
      f[c] = Cyclotomic(q);
    }
    auto coeffs = solve_row_combination(xhat.Xhat, f);
    std::vector<Cyclotomic> back(k, Cyclotomic(0L));
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) back[c] += coeffs[r] * xhat.Xhat[r][c];
    solved = (back == f);
  }
  rep.add("random-class-function-solves", solved);

  // indicator of the identity G-class solves uniquely
  {
    std::vector<Cyclotomic> ind(k, Cyclotomic(0L));
    ind[0] = Cyclotomic(1L);
    auto coeffs = solve_row_combination(xhat.Xhat, ind);
    std::vector<Cyclotomic> back(k, Cyclotomic(0L));
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) back[c] += coeffs[r] * xhat.Xhat[r][c];
    rep.add("identity-indicator-solves", back == ind);
  }

  // row sums decompose with coefficients all one
  {
    std::vector<Cyclotomic> f(k, Cyclotomic(0L));
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) f[c] += xhat.Xhat[r][c];
    auto coeffs = solve_row_combination(xhat.Xhat, f);
    bool ones = true;
    for (const auto& c : coeffs) ones = ones && (c == Cyclotomic(1L));
    rep.add("row-sum-coefficients-one", ones);
  }

  // random nonnegative integer combinations come back exactly
  bool invariant_chars_ok = true;
  for (int trial = 0; trial < 3 && invariant_chars_ok; ++trial) {
    std::vector<long> want(k);
    for (auto& w : want) w = static_cast<long>(rng() % 4);
    if (std::all_of(want.begin(), want.end(), [](long w) { return w == 0; })) want[0] = 1;
    std::vector<Cyclotomic> f(k, Cyclotomic(0L));
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) f[c] += Cyclotomic(want[r]) * xhat.Xhat[r][c];
    auto coeffs = solve_row_combination(xhat.Xhat, f);
    for (size_t r = 0; r < k; ++r)
      if (!(coeffs[r] == Cyclotomic(want[r]))) invariant_chars_ok = false;
  }
  rep.add("invariant-character-decomposition", invariant_chars_ok);

  // X row = e * Xhat row, restated as a decomposition statement
  bool restriction_ok = true;
  for (size_t b = 0; b < k; ++b) {
    auto coeffs = solve_row_combination(xhat.Xhat, x.X[b]);
    for (size_t r = 0; r < k; ++r) {
      Cyclotomic want = (r == b) ? Cyclotomic(static_cast<long>(xhat.e[b])) : Cyclotomic(0L);
      if (!(coeffs[r] == want)) restriction_ok = false;
    }
  }
  rep.add("restriction-is-e-times-xhat", restriction_ok);
  return rep;
}

CheckReport generalized_brauer_check(const InvariantTable& xhat, const GCharTable& x,
                                     const CharacterTable& t, const TableAction& action) {
  CheckReport rep;
  size_t k = x.k();
  uint64_t n_exponent = 1;
  for (int c : x.column_classes)
    n_exponent = lcm_u64(n_exponent, t.classes.element_orders[static_cast<size_t>(c)]);
  long kpow = action.inversion ? -1 : action.galois_k;
  if (gcd_u64(static_cast<uint64_t>(((kpow % static_cast<long>(n_exponent)) + static_cast<long>(n_exponent)) % static_cast<long>(n_exponent)),
              n_exponent) != 1)
    fail(ErrorKind::IncompatibleAction, "galois exponent not coprime to the exponent of N");

  // order of the action
  uint64_t kk = static_cast<uint64_t>(((kpow % static_cast<long>(n_exponent)) + static_cast<long>(n_exponent)) % static_cast<long>(n_exponent));
  uint64_t action_order = 1, acc = kk % n_exponent;
  while (acc != 1 % n_exponent) {
    acc = acc * kk % n_exponent;
    ++action_order;
  }

  auto pcm_full = [&](long kp) {
    auto full = power_class_map(*t.group, t.classes, kp);
    std::vector<int> out(k);
    for (size_t col = 0; col < k; ++col) {
      int image = full[static_cast<size_t>(x.column_classes[col])];
      int local = -1;
      for (size_t c2 = 0; c2 < k; ++c2)
        if (x.column_classes[c2] == image) local = static_cast<int>(c2);
      if (local < 0) fail(ErrorKind::Internal, "power map left the normal subgroup");
      out[col] = local;
    }
    return out;
  };

  for (uint64_t step = 1; step <= action_order; ++step) {
    long kp = 1;
    for (uint64_t i = 0; i < step; ++i) kp = static_cast<long>((static_cast<uint64_t>(kp) * kk) % n_exponent);
    auto class_map = pcm_full(kp);
    // row action: apply the inverse Galois twist entrywise, then locate the row
    uint64_t kinv = mod_inv(static_cast<uint64_t>(kp) % n_exponent, n_exponent);
    std::vector<int> row_map(k, -1);
    for (size_t r = 0; r < k; ++r) {
      std::vector<Cyclotomic> twisted(k);
      for (size_t c = 0; c < k; ++c) twisted[c] = xhat.Xhat[r][c].galois(static_cast<long>(kinv));
      for (size_t r2 = 0; r2 < k; ++r2)
        if (xhat.Xhat[r2] == twisted) row_map[r] = static_cast<int>(r2);
      if (row_map[r] < 0)
        fail(ErrorKind::IncompatibleAction, "action does not permute the Xhat rows");
    }
    // compatibility: Xhat^a_i(n^a) == Xhat_i(n), exactly
    bool compatible = true;
    for (size_t r = 0; r < k && compatible; ++r)
      for (size_t c = 0; c < k; ++c)
        if (!(xhat.Xhat[static_cast<size_t>(row_map[r])][static_cast<size_t>(class_map[c])] ==
              xhat.Xhat[r][c])) {
          compatible = false;
          break;
        }
    rep.add("compatible-step-" + std::to_string(step), compatible);
    uint64_t fixed_rows = 0, fixed_classes = 0;
    for (size_t r = 0; r < k; ++r)
      if (row_map[r] == static_cast<int>(r)) ++fixed_rows;
    for (size_t c = 0; c < k; ++c)
      if (class_map[c] == static_cast<int>(c)) ++fixed_classes;
    std::ostringstream detail;
    detail << "fixed rows " << fixed_rows << ", fixed classes " << fixed_classes;
    rep.add("fixed-count-step-" + std::to_string(step), fixed_rows == fixed_classes,
            detail.str());
  }
  return rep;
}

RealCounts real_counts(const InvariantTable& xhat, const CharacterTable& t,
                       const NormalSubgroup& n) {
  RealCounts rc;
  for (const auto& row : xhat.Xhat) {
    bool real = true;
    for (const auto& v : row) real = real && v.is_real();
    if (real) ++rc.real_rows;
  }
  rc.real_classes = real_g_classes(t, n).size();
  return rc;
}

DeductionReport structural_deductions(const GCharTable& x, const ParamSolutionSet& params,
                                      const InvariantTable& xhat, const RealCounts& counts,
                                      const SubIrrData& oracle) {
  DeductionReport rep;
  auto push = [&rep](std::string kind, std::string statement, bool confirmed,
                     std::string detail = "") {
    rep.items.push_back({std::move(kind), std::move(statement), confirmed, std::move(detail)});
    rep.all_confirmed = rep.all_confirmed && rep.items.back().oracle_confirmed;
  };
  const PermGroup& n_group = *oracle.n_group;

  bool has_zero = false;
  for (const auto& row : x.X)
    for (const auto& v : row) has_zero = has_zero || v.is_zero();
  if (!has_zero)
    push("no-zeros-nilpotent", "X has no zero entries, so N is nilpotent",
         is_nilpotent(n_group));

  // prime set of Xhat_i(1) equals the prime set of B_i
  bool rad_ok = true;
  std::ostringstream primes_detail;
  for (size_t b = 0; b < x.k(); ++b) {
    uint64_t inv_degree = static_cast<uint64_t>(to_int64(*xhat.Xhat[b][0].rational_value()));
    uint64_t B = static_cast<uint64_t>(to_int64(params.relations[b].B));
    rad_ok = rad_ok && (radical(inv_degree) == radical(B));
    primes_detail << (b ? " " : "") << radical(inv_degree);
  }
  push("invariant-degree-primes",
       "prime divisors of each minimal invariant degree are read off B_i", rad_ok,
       "radicals: " + primes_detail.str());

  for (uint64_t p : prime_divisors(x.normal_order)) {
    bool divides_some = false;
    for (const auto& r : params.relations)
      if (r.B % Integer(static_cast<long>(p)) == 0) divides_some = true;
    if (!divides_some)
      push("abelian-normal-sylow",
           "prime " + std::to_string(p) +
               " divides no B_i, so N has an abelian normal Sylow " + std::to_string(p) +
               "-subgroup",
           has_abelian_normal_sylow(n_group, p));
  }

  if (counts.real_classes == 1)
    push("one-real-class-odd-order", "a unique real G-class forces |N| odd",
         n_group.order() % 2 == 1);
  if (counts.real_classes == 2)
    push("two-real-classes-sylow2",
         "exactly two real G-classes force a normal Sylow 2-subgroup of N",
         has_normal_sylow(n_group, 2));
  return rep;
}

}  // namespace gct
