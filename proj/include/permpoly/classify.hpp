#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permpoly/basis.hpp"
#include "permpoly/wclass.hpp"

namespace permpoly {

/// Outcome of the ten-class coverage test: the class Av(basis) has
/// polynomial growth exactly when every one of the ten obstruction
/// classes contains a basis element.
struct GrowthVerdict {
  bool polynomial = false;
  std::vector<TenClass> uncovered;  // empty iff polynomial
};

GrowthVerdict classify(const Basis& basis);

/// A structural match for a two- or three-element basis: which case fired,
/// under which symmetry, with which role assignment.  Applying
/// witness_symmetry to the basis and reading the members in assignment
/// order yields permutations literally matching the case's description.
struct CaseLabel {
  int theorem = 0;            // 2 or 3
  std::string case_path;      // "1", "2" / "1a".."3c"
  Symmetry witness_symmetry = Symmetry::Identity;
  std::vector<Permutation> assignment;  // transformed members in role order
};

/// Structural matcher for bases of exactly two permutations, each of
/// length >= 3.  Case 1: one member increasing, the other decreasing.
/// Case 2: one member increasing, the other a reversed-layered
/// permutation with exactly one layer of size 2.  Searches the eight
/// symmetries and both role assignments in a fixed order and returns the
/// first match, or nullopt.
std::optional<CaseLabel> match_two_basis(const Basis& basis);
std::vector<CaseLabel> match_two_basis_all(const Basis& basis);

/// Structural matcher for bases of exactly three permutations, each of
/// length >= 3, over 8 symmetries x 6 role assignments x cases 1a..3c in
/// a fixed deterministic order.
std::optional<CaseLabel> match_three_basis(const Basis& basis);
std::vector<CaseLabel> match_three_basis_all(const Basis& basis);

}  // namespace permpoly
