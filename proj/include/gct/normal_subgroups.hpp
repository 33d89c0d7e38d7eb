#pragma once

#include <optional>
#include <set>

#include "gct/character_table.hpp"

namespace gct {

/// A normal subgroup presented as a union of G-conjugacy classes.
struct NormalSubgroup {
  std::vector<int> class_indices;   // sorted G-class indices
  uint64_t order = 0;
  std::vector<uint8_t> membership;  // bitmap over G element indices
  std::string id;                   // stable hash of the sorted member class reps

  bool contains_class(int c) const {
    return std::binary_search(class_indices.begin(), class_indices.end(), c);
  }
  bool contains_element(int e) const { return membership[static_cast<size_t>(e)] != 0; }
};

/// Classes where the character attains its degree: the kernel, as a class set.
std::vector<int> kernel_of(const CharacterTable& t, size_t row);

/// All normal subgroups, via closure of character kernels under pairwise
/// intersection. Each result is verified to be closed under multiplication
/// on the elements. Sorted by (order, class indices).
std::vector<NormalSubgroup> normal_subgroups(const CharacterTable& t);

/// Independent oracle: enumerate unions of classes closed under class
/// multiplication (no character theory involved).
std::vector<std::vector<int>> normal_class_sets_bruteforce(const PermGroup& g,
                                                           const ClassData& cd);

NormalSubgroup normal_from_classes(const CharacterTable& t, std::vector<int> classes);
NormalSubgroup normal_by_id(const CharacterTable& t, const std::string& id);

/// The subgroup as a PermGroup in its own right (restricted natural action,
/// which stays faithful; generators picked greedily from the member list).
PermGroup materialize(const PermGroup& g, const NormalSubgroup& n);

/// Ground-truth data about the conjugation action of G on Irr(N).
struct SubIrrData {
  std::shared_ptr<const PermGroup> n_group;
  CharacterTable table_n;
  std::vector<int> n_index_to_g;      // N element index -> G element index
  std::vector<int> g_class_of_n_class;  // fusion: N-class -> G-class
  std::vector<int> orbit_of;          // Irr(N) row -> orbit index
  std::vector<std::vector<int>> orbits;  // sorted row lists
  std::vector<uint64_t> t;            // orbit lengths t_i, ordered by orbit
  std::vector<int> theta_reps;        // smallest row index per orbit
  std::vector<uint64_t> theta_degrees;  // degree of any member, per orbit

  // class permutation of N-classes induced by conjugation with G element g
  std::vector<int> class_action(const PermGroup& g_group, int g) const;
  // permutation of Irr(N) rows induced by g (rows matched exactly)
  std::vector<int> irr_action(const PermGroup& g_group, int g) const;
};

SubIrrData g_action_on_irrN(std::shared_ptr<const PermGroup> g,
                            const NormalSubgroup& n, uint64_t seed = 0);

/// Per-element Brauer check over a transversal of G/N: for each coset
/// representative the number of fixed Irr(N) equals the number of fixed
/// N-classes. Also reports the counts fixed under all of G, which need not
/// agree with each other.
struct BrauerElementReport {
  struct PerElement {
    int element;  // G element index
    uint64_t fixed_chars;
    uint64_t fixed_classes;
  };
  std::vector<PerElement> per_element;
  bool per_element_equal = true;
  uint64_t invariant_chars = 0;    // Irr(N) fixed by every g in G
  uint64_t invariant_classes = 0;  // N-classes fixed by every g in G
  uint64_t orbit_count = 0;        // orbits of G on Irr(N)
  uint64_t g_class_count = 0;      // G-classes contained in N
};

BrauerElementReport brauer_per_element_check(const PermGroup& g,
                                             const NormalSubgroup& n,
                                             const SubIrrData& sub);

/// G-classes inside N fixed by inversion.
std::vector<int> real_g_classes(const CharacterTable& t, const NormalSubgroup& n);

// structure oracles used to confirm table-side deductions
std::optional<std::vector<int>> normal_sylow_elements(const PermGroup& g, uint64_t p);
bool has_normal_sylow(const PermGroup& g, uint64_t p);
bool has_abelian_normal_sylow(const PermGroup& g, uint64_t p);
bool is_abelian(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

}  // namespace gct
