#pragma once

#include <map>
#include <optional>
#include <string>

#include "gct/numeric.hpp"

namespace gct {

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Values are stored on the tensor integral basis of Q(zeta_n): writing
/// n = prod q, q = p^a ranging over the maximal prime power divisors, a
/// basis monomial zeta_n^e is one whose component exponent modulo each q
/// (under CRT) is below phi(q). After every operation the conductor is
/// reduced to the minimal one, so two equal values always have identical
/// stored form and operator== is structural. Rationals live at conductor 1,
/// zero is the empty sum.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  Cyclotomic(long v);  // NOLINT: implicit by design, tables read naturally
  Cyclotomic(const Rational& r);

  /// zeta_n^k, k arbitrary (reduced mod n).
  static Cyclotomic zeta(unsigned n, long k = 1);

  unsigned conductor() const { return n_; }
  const std::map<unsigned, Rational>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  bool is_real() const;
  /// The value as a rational, when the conductor reduces to 1.
  std::optional<Rational> rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  /// Complex conjugation, zeta_n -> zeta_n^(n-1).
  Cyclotomic conjugate() const;
  /// Galois action zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
  Cyclotomic galois(long k) const;
  /// Multiplicative inverse of a nonzero value.
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  /// |a|^2 = a * conjugate(a), always real.
  Cyclotomic norm_squared() const { return *this * conjugate(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  /// Total order used for canonical sorting: by conductor, then term list.
  /// Chosen so that among roots of unity 1 sorts first.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);
  struct Less {
    bool operator()(const Cyclotomic& a, const Cyclotomic& b) const {
      return compare(a, b) < 0;
    }
  };

  /// Exact serialization, e.g. "1/2 + 3*z(12)^7".
  std::string to_string() const;
  /// Compact display form for tables, e.g. "-2ζ3^2".
  std::string pretty() const;

 private:
  unsigned n_;                       // conductor (minimal), >= 1
  std::map<unsigned, Rational> c_;   // basis exponent -> coefficient

  void canonicalize();
  static void add_monomial(std::map<unsigned, Rational>& acc, unsigned n,
                           uint64_t e, const Rational& coeff);
  friend struct CycloTestAccess;
};

}  // namespace gct
