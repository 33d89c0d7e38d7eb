#include "gct/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace gct {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
      fail(ErrorKind::BadGroupInput, "permutation images are not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::cycle(int degree, const std::vector<int>& points) {
  Permutation p = identity(degree);
  for (size_t i = 0; i < points.size(); ++i) {
    int from = points[i];
    int to = points[(i + 1) % points.size()];
    if (from < 0 || from >= degree) fail(ErrorKind::BadGroupInput, "cycle point out of range");
    p.images_[static_cast<size_t>(from)] = to;
  }
  return Permutation(p.images_);  // re-validate
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) fail(ErrorKind::DegreeMismatch, "permutation degree mismatch");
  Permutation r;
  r.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = images_[static_cast<size_t>(o.images_[i])];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  return r;
}

Permutation Permutation::power(long k) const {
  uint64_t o = order();
  uint64_t e = static_cast<uint64_t>(((k % static_cast<long>(o)) + static_cast<long>(o)) % static_cast<long>(o));
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated(const Permutation& x) const {
  return *this * x * inverse();
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  uint64_t o = 1;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(images_[j])) {
      seen[j] = 1;
      ++len;
    }
    o = lcm_u64(o, len);
  }
  return o;
}

std::string Permutation::to_cycle_string() const {
  std::vector<char> seen(images_.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << "(";
    bool first = true;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(images_[j])) {
      seen[j] = 1;
      if (!first) os << " ";
      os << j;
      first = false;
    }
    os << ")";
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace gct
