#pragma once

#include "gct/normal_subgroups.hpp"

namespace gct {

/// Partition of Irr(G) by proportionality of restrictions to N: two rows are
/// equivalent iff chi(n)*phi(1) == phi(n)*chi(1) on every G-class inside N.
/// Blocks are ordered by their smallest row index, so the trivial character
/// always sits in block 0.
struct EquivClasses {
  std::vector<std::vector<int>> blocks;  // sorted row indices per block
  std::vector<int> block_of;             // row -> block
  std::vector<int> representative;       // default policy: lowest row index
  /// e_chi / e_rep for every row, equal to chi(1)/rep(1).
  std::vector<Rational> ratio_to_rep;
};

EquivClasses equivalence_classes(const CharacterTable& t, const NormalSubgroup& n);

/// The G-character table X of N for a chosen representative system, its
/// diagonal D of G-class sizes, and Lambda = X D conj(X)^t.
struct GCharTable {
  std::vector<int> column_classes;  // G-class indices inside N, canonical order
  std::vector<int> row_chars;       // chosen representative row per block
  std::vector<std::vector<Cyclotomic>> X;
  std::vector<uint64_t> D;
  std::vector<Integer> lambda;  // filled by lambda_and_relations
  std::string normal_id;
  uint64_t normal_order = 0;
  uint64_t group_order = 0;

  size_t k() const { return column_classes.size(); }
};

/// Representatives default to the lowest row index per block; an explicit
/// list (one row per block, any order) reproduces published choices.
GCharTable g_character_table(const CharacterTable& t, const NormalSubgroup& n,
                             const EquivClasses& ec,
                             const std::vector<int>* explicit_reps = nullptr);

/// Integer relations read off Lambda for each block:
///   A = e^2 t = lambda/|N|,  B = t d^2 = |N| chi(1)^2 / lambda,
///   C = d/e = |N| chi(1) / lambda,  with d = theta(1).
struct BlockRelations {
  Integer A;
  Integer B;
  Rational C;
  uint64_t chi_degree = 0;
};

struct ParamTriple {
  uint64_t e, t, d;
  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
  friend auto operator<=>(const ParamTriple&, const ParamTriple&) = default;
};

struct ParamSolutionSet {
  std::vector<BlockRelations> relations;
  std::vector<std::vector<ParamTriple>> solutions;  // per block, sorted
  bool hall_applied = false;                        // gcd(|N|, |G:N|) = 1
  std::vector<bool> squarefree_applied;             // A or B squarefree, per block
  std::vector<bool> determined;                     // exactly one solution
};

/// Computes Lambda exactly, asserts diagonality/positivity/integrality and
/// fills A, B, C. Solutions are left empty.
ParamSolutionSet lambda_and_relations(GCharTable& x);

/// The restriction of the block representative is irreducible iff
/// lambda_i = |N|.
bool restriction_irreducible(const GCharTable& x, size_t block);

/// Enumerates all (e, t, d) with e^2 t = A, t d^2 = B, t | |G:N|, d | |N|.
/// The Hall and square-free shortcuts are filters over the same enumeration,
/// recorded in the flags.
ParamSolutionSet infer_parameters(const GCharTable& x, ParamSolutionSet rel);

/// Rows are the minimal G-invariant characters evaluated on the G-classes of
/// N, matched one-to-one against the blocks of X; X row i = e_i * Xhat row i.
struct InvariantTable {
  std::vector<std::vector<Cyclotomic>> Xhat;
  std::vector<uint64_t> e;          // ramification number per block
  std::vector<int> orbit_for_block;  // matched oracle orbit index
};

InvariantTable invariant_table(const GCharTable& x, const SubIrrData& oracle);

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    items.push_back({name, pass, detail});
  }
};

/// Xhat rows form a basis of the G-invariant class functions of N: checks
/// nonsingularity, unique solves for random invariant class functions, and
/// nonnegative-integer decomposition of random invariant characters.
CheckReport basis_check_cfGN(const InvariantTable& xhat, const GCharTable& x,
                             uint64_t seed = 0);

/// Compatible action for the generalized Brauer count: inversion or a Galois
/// twist zeta -> zeta^k together with n -> n^k on classes.
struct TableAction {
  bool inversion = false;
  long galois_k = 1;
};

/// Verifies compatibility exactly, then checks per-element fixed-row vs
/// fixed-column counts over the cyclic group generated by the action.
CheckReport generalized_brauer_check(const InvariantTable& xhat, const GCharTable& x,
                                     const CharacterTable& t, const TableAction& action);

struct RealCounts {
  uint64_t real_rows = 0;
  uint64_t real_classes = 0;
};

RealCounts real_counts(const InvariantTable& xhat, const CharacterTable& t,
                       const NormalSubgroup& n);

/// One structural claim read off the tables, cross-validated on the group.
struct Deduction {
  std::string kind;
  std::string statement;
  bool oracle_confirmed = false;
  std::string detail;
};

struct DeductionReport {
  std::vector<Deduction> items;
  bool all_confirmed = true;
};

DeductionReport structural_deductions(const GCharTable& x, const ParamSolutionSet& params,
                                      const InvariantTable& xhat, const RealCounts& counts,
                                      const SubIrrData& oracle);

}  // namespace gct
