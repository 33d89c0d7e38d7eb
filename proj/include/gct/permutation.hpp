#pragma once

#include <cstdint>
#include <vector>

#include "gct/numeric.hpp"

namespace gct {

/// Bijection on {0..degree-1}, stored as the image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Single cycle on the given points, identity elsewhere.
  static Permutation cycle(int degree, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition: (a*b)(x) = a(b(x)).
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  Permutation power(long k) const;
  /// this * x * this^{-1}
  Permutation conjugated(const Permutation& x) const;

  bool is_identity() const;
  uint64_t order() const;  // lcm of cycle lengths

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace gct
