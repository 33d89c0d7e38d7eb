#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gct {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error kinds surfaced through the C API as status codes.
enum class ErrorKind {
  DegreeMismatch,
  OrderCapExceeded,
  UnknownCatalogName,
  BadGroupInput,
  ActionInconsistent,
  OrthogonalityViolation,
  BadRepresentative,
  NonIntegralRelation,
  NoSolution,
  BlockOrbitMismatch,
  IncompatibleAction,
  BadNormalId,
  Internal,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail(ErrorKind::Internal, "integer out of int64 range");
  return z.get_si();
}

inline int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) fail(ErrorKind::Internal, "rational is not an integer");
  return to_int64(Integer(q.get_num()));
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }
inline uint64_t lcm_u64(uint64_t a, uint64_t b) { return std::lcm(a, b); }

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);
std::vector<uint64_t> divisors(uint64_t n);
std::vector<uint64_t> prime_divisors(uint64_t n);
uint64_t radical(uint64_t n);
bool is_perfect_square(uint64_t n, uint64_t* root = nullptr);
bool is_squarefree(uint64_t n);
bool is_prime_u64(uint64_t n);
unsigned euler_phi(unsigned n);

/// x^e mod m without overflow (m < 2^63).
uint64_t mod_pow(uint64_t x, uint64_t e, uint64_t m);
uint64_t mod_inv(uint64_t x, uint64_t m);  // m need not be prime; gcd(x,m)=1

}  // namespace gct
