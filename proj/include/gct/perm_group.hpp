#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gct/permutation.hpp"

namespace gct {

inline constexpr uint64_t kDefaultOrderCap = 4096;

/// Conjugacy class partition of an enumerated group, in canonical order:
/// classes sorted by (element order, class size, smallest member index).
struct ClassData {
  std::vector<int> class_of;         // element index -> class index
  std::vector<int> representatives;  // class -> smallest member element index
  std::vector<uint64_t> sizes;
  std::vector<uint64_t> element_orders;  // order of any member, per class
  std::vector<std::string> names;        // ATLAS-style: "1A", "2B", ...
  size_t count() const { return sizes.size(); }
};

/// Fully enumerated finite permutation group. Elements are listed in BFS
/// order from the identity (level by level over the generators, levels
/// sorted lexicographically), so the enumeration is deterministic.
class PermGroup {
 public:
  static PermGroup from_generators(std::vector<Permutation> gens,
                                   int degree_if_empty = 1,
                                   uint64_t order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int i) const { return elements_[static_cast<size_t>(i)]; }

  /// Index lookup; -1 when the permutation is not in the group.
  int index_of(const Permutation& p) const;
  int mul(int i, int j) const;
  int inv(int i) const { return inverse_[static_cast<size_t>(i)]; }
  int conj(int g, int x) const;  // g x g^{-1}
  int power(int i, long k) const;
  uint64_t element_order(int i) const { return elements_[static_cast<size_t>(i)].order(); }

  uint64_t exponent() const;  // lcm of element orders

  /// Canonical content hash: FNV-1a over the sorted element image lists.
  /// Depends only on the permutation group itself, not its presentation.
  std::string content_hash() const;

 private:
  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<int> inverse_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

ClassData conjugacy_classes(const PermGroup& g);

/// Class index of x^k for x in class j; well-defined over representatives.
std::vector<int> power_class_map(const PermGroup& g, const ClassData& cd, long k);

/// Named group constructions. Accepted names: cyclic:<n>, dihedral:<order>,
/// symmetric:<n>, alternating:<n>, direct_product:<atom>,<atom>,...,
/// D8xA4, AutD16, HolC5, E8semiC4, and atom shorthands C<n>/D<n>/S<n>/A<n>.
PermGroup catalog(const std::string& spec);

/// Group input JSON: {"degree": n, "generators": [[1-based image lists]]}.
PermGroup group_from_json_text(const std::string& text);
std::string group_to_json_text(const PermGroup& g);

}  // namespace gct
