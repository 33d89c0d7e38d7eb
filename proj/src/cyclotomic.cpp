#include "gct/cyclotomic.hpp"

#include <sstream>

namespace gct {

namespace {

struct PrimePowerPart {
  unsigned p;        // prime
  unsigned q;        // p^a, maximal power dividing n
  unsigned phi;      // phi(q) = q - q/p
  unsigned cof;      // n / q
  unsigned inv_cof;  // cof^{-1} mod q
};

std::vector<PrimePowerPart> conductor_parts(unsigned n) {
  std::vector<PrimePowerPart> parts;
  for (auto [p64, a] : factorize(n)) {
    PrimePowerPart pp;
    pp.p = static_cast<unsigned>(p64);
    pp.q = 1;
    for (unsigned i = 0; i < a; ++i) pp.q *= pp.p;
    pp.phi = pp.q - pp.q / pp.p;
    pp.cof = n / pp.q;
    pp.inv_cof = static_cast<unsigned>(mod_inv(pp.cof % pp.q, pp.q));
    parts.push_back(pp);
  }
  return parts;
}

}  // namespace

Cyclotomic::Cyclotomic(long v) : n_(1) {
  if (v != 0) c_[0] = Rational(v);
}

Cyclotomic::Cyclotomic(const Rational& r) : n_(1) {
  if (r != 0) {
    Rational q = r;
    q.canonicalize();  // callers may pass mpq_class(n, d) raw
    c_[0] = q;
  }
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k) {
  if (n == 0) fail(ErrorKind::Internal, "zeta: conductor must be positive");
  Cyclotomic z;
  z.n_ = n;
  uint64_t e = static_cast<uint64_t>(((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n));
  add_monomial(z.c_, n, e, Rational(1));
  z.canonicalize();
  return z;
}

// Rewrite zeta_n^e into basis monomials. Per prime power q = p^a with
// component c = e*inv_cof mod q: if c >= phi(q), the relation
// zeta_q^(phi+r) = -sum_{i<p-1} zeta_q^(i*q/p + r) brings every component
// below phi(q) in a single step; branches across primes multiply out.
void Cyclotomic::add_monomial(std::map<unsigned, Rational>& acc, unsigned n,
                              uint64_t e, const Rational& coeff) {
  if (coeff == 0) return;
  e %= n;
  if (n == 1) {
    Rational& slot = acc[0];
    slot += coeff;
    return;
  }
  auto parts = conductor_parts(n);
  // (component exponents per part, sign) pairs under expansion
  std::vector<std::pair<std::vector<unsigned>, int>> branches;
  branches.push_back({{}, 1});
  for (const auto& pp : parts) {
    unsigned c = static_cast<unsigned>((e % pp.q) * pp.inv_cof % pp.q);
    std::vector<std::pair<std::vector<unsigned>, int>> next;
    if (c < pp.phi) {
      for (auto& [comps, sign] : branches) {
        auto v = comps;
        v.push_back(c);
        next.push_back({std::move(v), sign});
      }
    } else {
      unsigned r = c - pp.phi;  // r < q/p
      unsigned step = pp.q / pp.p;
      for (auto& [comps, sign] : branches) {
        for (unsigned i = 0; i + 1 < pp.p; ++i) {
          auto v = comps;
          v.push_back(r + i * step);
          next.push_back({std::move(v), -sign});
        }
      }
    }
    branches = std::move(next);
  }
  for (auto& [comps, sign] : branches) {
    uint64_t ee = 0;
    for (size_t i = 0; i < parts.size(); ++i)
      ee = (ee + static_cast<uint64_t>(parts[i].cof) * comps[i]) % n;
    Rational& slot = acc[static_cast<unsigned>(ee)];
    if (sign > 0)
      slot += coeff;
    else
      slot -= coeff;
  }
}

// Drop zero terms and shrink the conductor while the value lies in a proper
// cyclotomic subfield. On the tensor basis that is a purely structural test:
// the value lies in Q(zeta_{n/p}) iff every stored component at p is
// divisible by p (or zero, when p || n).
void Cyclotomic::canonicalize() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
  if (c_.empty()) {
    n_ = 1;
    return;
  }
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    auto parts = conductor_parts(n_);
    for (const auto& pp : parts) {
      bool reducible = true;
      for (const auto& [e, coeff] : c_) {
        unsigned c = static_cast<unsigned>(static_cast<uint64_t>(e % pp.q) * pp.inv_cof % pp.q);
        bool ok = (pp.q == pp.p) ? (c == 0) : (c % pp.p == 0);
        if (!ok) {
          reducible = false;
          break;
        }
      }
      if (!reducible) continue;
      unsigned np = n_ / pp.p;
      std::map<unsigned, Rational> nc;
      auto nparts = conductor_parts(np);
      for (const auto& [e, coeff] : c_) {
        // extract components with the OLD conductor data, recombine with the
        // new cofactors
        uint64_t ee = 0;
        for (const auto& npp : nparts) {
          unsigned comp;
          if (npp.p == pp.p) {
            unsigned c = static_cast<unsigned>(static_cast<uint64_t>(e % pp.q) * pp.inv_cof % pp.q);
            comp = c / pp.p;
          } else {
            const PrimePowerPart* old = nullptr;
            for (const auto& cand : parts)
              if (cand.p == npp.p) old = &cand;
            unsigned c = static_cast<unsigned>(static_cast<uint64_t>(e % old->q) * old->inv_cof % old->q);
            comp = c;
          }
          ee = (ee + static_cast<uint64_t>(npp.cof) * comp) % np;
        }
        nc[static_cast<unsigned>(ee)] = coeff;
      }
      n_ = np;
      c_ = std::move(nc);
      changed = true;
      break;
    }
  }
}

bool Cyclotomic::is_real() const { return conjugate() == *this; }

std::optional<Rational> Cyclotomic::rational_value() const {
  if (n_ != 1) return std::nullopt;
  if (c_.empty()) return Rational(0);
  return c_.begin()->second;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [e, coeff] : r.c_) coeff = -coeff;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r;
  unsigned L = static_cast<unsigned>(lcm_u64(n_, o.n_));
  r.n_ = L;
  if (L == n_ && L == o.n_) {
    r.c_ = c_;
    for (const auto& [e, coeff] : o.c_) r.c_[e] += coeff;
  } else {
    for (const auto& [e, coeff] : c_)
      add_monomial(r.c_, L, static_cast<uint64_t>(e) * (L / n_), coeff);
    for (const auto& [e, coeff] : o.c_)
      add_monomial(r.c_, L, static_cast<uint64_t>(e) * (L / o.n_), coeff);
  }
  r.canonicalize();
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  Cyclotomic r;
  unsigned L = static_cast<unsigned>(lcm_u64(n_, o.n_));
  r.n_ = L;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_)
      add_monomial(r.c_, L,
                   static_cast<uint64_t>(e1) * (L / n_) + static_cast<uint64_t>(e2) * (L / o.n_),
                   c1 * c2);
  r.canonicalize();
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (n_ == 1) return *this;
  return galois(static_cast<long>(n_) - 1);
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  uint64_t kk = static_cast<uint64_t>(((k % static_cast<long>(n_)) + static_cast<long>(n_)) % static_cast<long>(n_));
  if (gcd_u64(kk, n_) != 1)
    fail(ErrorKind::Internal, "galois: exponent not coprime to conductor");
  Cyclotomic r;
  r.n_ = n_;
  for (const auto& [e, coeff] : c_)
    add_monomial(r.c_, n_, static_cast<uint64_t>(e) * kk, coeff);
  r.canonicalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::Internal, "inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_.begin()->second);
  // product of all nontrivial Galois conjugates; times *this it is the
  // rational field norm
  Cyclotomic prod(1L);
  for (unsigned k = 2; k < n_; ++k) {
    if (gcd_u64(k, n_) != 1) continue;
    prod *= galois(static_cast<long>(k));
  }
  Cyclotomic nrm = *this * prod;
  auto nr = nrm.rational_value();
  if (!nr || *nr == 0) fail(ErrorKind::Internal, "inverse: norm not a nonzero rational");
  return prod * Cyclotomic(Rational(1) / *nr);
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
  auto ia = a.c_.begin(), ib = b.c_.begin();
  while (ia != a.c_.end() && ib != b.c_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c > 0 ? -1 : 1;  // larger coefficient first: 1 before -1
    ++ia;
    ++ib;
  }
  if (ia == a.c_.end() && ib == b.c_.end()) return 0;
  return ia == a.c_.end() ? -1 : 1;
}

namespace {
std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}
}  // namespace

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : c_) {
    Rational a = coeff;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << "z(" << n_ << ")";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::string Cyclotomic::pretty() const {
  if (c_.empty()) return "0";
  if (n_ == 1) return rational_str(c_.begin()->second);
  // single rational multiple of a root of unity displays in the published
  // c*zeta^k form even when the basis expansion has several terms
  for (unsigned k = 1; k < n_; ++k) {
    Cyclotomic q = *this * zeta(n_, -static_cast<long>(k));
    auto r = q.rational_value();
    if (!r) continue;
    std::ostringstream os;
    if (*r == -1)
      os << "-";
    else if (*r != 1)
      os << rational_str(*r);
    os << "ζ" << n_;
    if (k != 1) os << "^" << k;
    return os.str();
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : c_) {
    Rational a = coeff;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a);
      os << "ζ" << n_;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace gct
