#pragma once

#include "gct/g_table.hpp"

namespace gct {

/// Sparse element of the group algebra over the cyclotomics.
struct GroupAlgebraElement {
  std::shared_ptr<const PermGroup> group;
  std::map<int, Cyclotomic> coeffs;  // element index -> coefficient, no zeros

  void set(int e, Cyclotomic v);
  Cyclotomic at(int e) const;
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.coeffs == b.coeffs;
  }
  bool supported_in(const NormalSubgroup& n) const;
};

GroupAlgebraElement class_sum(std::shared_ptr<const PermGroup> g, const ClassData& cd,
                              size_t cls);

/// Coordinates in the class-sum basis of Z(K[G]) cap K[N]: present iff v is
/// constant on every G-class and supported inside N. Coordinates follow the
/// order of n.class_indices.
std::optional<std::vector<Cyclotomic>> membership_and_coords(
    const GroupAlgebraElement& v, const ClassData& cd, const NormalSubgroup& n);

/// Three-way count equality: G-classes in N, orbits of G on Irr(N), blocks.
CheckReport dimension_check(const NormalSubgroup& n, const SubIrrData& oracle,
                            const EquivClasses& ec);

/// Block idempotents f_i = sum of central primitive idempotents over one
/// equivalence class: checks support in N, constancy on classes, pairwise
/// orthogonal idempotency, and that they sum to the group identity.
CheckReport idempotent_support_check(const CharacterTable& t, const EquivClasses& ec,
                                     const NormalSubgroup& n);

/// Class sums commute with every generator.
CheckReport centrality_check(const CharacterTable& t);

}  // namespace gct
