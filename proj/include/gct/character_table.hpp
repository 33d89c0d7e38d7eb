#pragma once

#include <memory>

#include "gct/cyclotomic.hpp"
#include "gct/perm_group.hpp"

namespace gct {

/// Exact ordinary character table. Rows are the irreducible characters in
/// canonical order (degree, then values left to right under the canonical
/// class order); columns follow ClassData. Row 0 is the trivial character
/// and column 0 the identity class, so column 0 lists the degrees.
struct CharacterTable {
  std::shared_ptr<const PermGroup> group;
  ClassData classes;
  std::vector<std::vector<Cyclotomic>> values;  // k x k
  std::vector<uint64_t> degrees;
  uint64_t exponent = 1;
  uint64_t dixon_prime = 0;
  uint64_t seed = 0;

  size_t k() const { return classes.count(); }
  const Cyclotomic& at(size_t row, size_t cls) const { return values[row][cls]; }
};

/// Compute the table by the Dixon-Schneider method: split the common
/// eigenspaces of the class matrices over GF(p) for the smallest prime
/// p = 1 (mod exponent), p > 2*ceil(sqrt(|G|)), then lift each value to an
/// exact sum of roots of unity via discrete Fourier sums of eigenvalue
/// multiplicities. The seed only feeds the fallback random recombination of
/// class matrices; the sorted result is seed-independent.
CharacterTable character_table(std::shared_ptr<const PermGroup> g, uint64_t seed = 0);

/// Class matrix M_i of the class algebra in the representative convention:
/// (M_i)[j][l] = #{x in K_i : x * rep(K_j) in K_l}. Row sums equal |K_i| and
/// the columns of the character table are its common eigenvectors.
std::vector<std::vector<uint64_t>> class_matrix(const PermGroup& g,
                                                const ClassData& cd, size_t i);

struct OrthogonalityReport {
  bool pass = true;
  std::string detail;  // first offending pair, when failing
};

/// Checks both orthogonality relations exactly; a failure means a bug
/// upstream (ErrorKind::OrthogonalityViolation is reserved for callers who
/// want to throw on it).
OrthogonalityReport verify_orthogonality(const CharacterTable& t);

/// Exact determinant, Gaussian elimination over the cyclotomic field.
Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m);

/// Solve A^T x = b for square nonsingular A given by rows (i.e. find the
/// coefficients expressing b as a combination of the rows of A).
std::vector<Cyclotomic> solve_row_combination(
    const std::vector<std::vector<Cyclotomic>>& rows,
    const std::vector<Cyclotomic>& target);

// serialization of tables (cache files); format documented in README
std::string table_to_json_text(const CharacterTable& t);
CharacterTable table_from_json_text(const std::string& text,
                                    std::shared_ptr<const PermGroup> g);

}  // namespace gct
