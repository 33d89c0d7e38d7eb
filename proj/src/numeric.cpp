#include "gct/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace gct {

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  std::vector<uint64_t> out{1};
  for (auto [p, a] : factorize(n)) {
    size_t sz = out.size();
    uint64_t pk = 1;
    for (unsigned i = 1; i <= a; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (auto [p, a] : factorize(n)) out.push_back(p);
  return out;
}

uint64_t radical(uint64_t n) {
  uint64_t r = 1;
  for (auto [p, a] : factorize(n)) r *= p;
  return r;
}

bool is_perfect_square(uint64_t n, uint64_t* root) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (root) *root = r;
  return r * r == n;
}

bool is_squarefree(uint64_t n) {
  for (auto [p, a] : factorize(n))
    if (a > 1) return false;
  return true;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (auto [p, a] : factorize(n)) r = r / static_cast<unsigned>(p) * (static_cast<unsigned>(p) - 1);
  return r;
}

uint64_t mod_pow(uint64_t x, uint64_t e, uint64_t m) {
  unsigned __int128 acc = 1, base = x % m;
  while (e) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<uint64_t>(acc);
}

uint64_t mod_inv(uint64_t x, uint64_t m) {
  int64_t a = static_cast<int64_t>(x % m), b = static_cast<int64_t>(m);
  int64_t u = 1, v = 0;
  while (b) {
    int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) fail(ErrorKind::Internal, "mod_inv: arguments not coprime");
  int64_t mm = static_cast<int64_t>(m);
  return static_cast<uint64_t>(((u % mm) + mm) % mm);
}

}  // namespace gct
