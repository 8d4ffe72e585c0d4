#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "permpoly/basis.hpp"
#include "permpoly/perm.hpp"

namespace permpoly {

/// Shape parameters of the forbidden pattern beta_pq: a decreasing run of
/// p top values, an ascent pair, and a decreasing run of q bottom values;
/// s = p + q + 2.
struct BetaShape {
  int p = 0;
  int q = 0;

  int s() const { return p + q + 2; }
};

/// The pattern lambda (q+1)(q+2) mu with lambda = (s)(s-1)...(q+3) and
/// mu = q(q-1)...1.  Throws std::invalid_argument when p + q < 1.
Permutation beta_perm(const BetaShape& shape);

/// The class under study: Av(12...r, beta_pq).
Basis degree_class_basis(int r, const BetaShape& shape);
bool in_degree_class(const Permutation& p, int r, const BetaShape& shape);

/// Largest length an irreducible member can have:
/// (r-1)^2(s-2) - (r-1) when p,q > 0, else (r-1)^2(s-2).
int irreducible_length_bound(int r, const BetaShape& shape);

/// Largest decreasing subsequence an irreducible member can have:
/// (r-1)(s-2) - 1 when p,q > 0, else (r-1)(s-2).
int irreducible_descent_bound(int r, const BetaShape& shape);

/// All irreducible members of Av(12...r, beta_pq) (including the empty
/// permutation), generated exhaustively up to the length bound; also
/// generates one length past the bound and checks that no irreducible
/// member exists there.
std::vector<Permutation> irreducibles_of(int r, const BetaShape& shape,
                                         Budget* budget = nullptr);

/// A position subset of an irreducible member certified simultaneously
/// expandable into arbitrarily long decreasing runs without leaving the
/// class.  Positions are 0-based and sorted.
struct ExpansibleSet {
  Permutation host;
  std::vector<int> positions;
};

/// Exact expansibility test.  E is expansible iff expanding its points
/// never manufactures the forbidden pattern; because runs preserve the
/// relative order of distinct points, every way beta_pq can appear in an
/// expansion projects to a marked occurrence of a partial contraction of
/// beta_pq in the host, which gives the avoidance conditions:
///   p = 0:      no 231-occurrence whose '1' is in E;
///   q = 0:      no 312-occurrence whose '3' is in E;
///   p, q >= 1:  no 4231-occurrence with both '4' and '1' in E, and no
///               occurrence of (top run of p)(ascent)(single bottom) whose
///               bottom is in E, and no occurrence of
///               (single top)(ascent)(bottom run of q) whose top is in E.
/// The last two conditions are vacuous when q = 1 resp. p = 1, where the
/// pattern in question is beta_pq itself.
bool is_expansible(const Permutation& host, const std::vector<int>& positions,
                   int r, const BetaShape& shape);

/// Maximum-cardinality expansible subset; exact branch-and-bound search,
/// lexicographically least among maximum sets.  Throws
/// std::invalid_argument if host is not an irreducible member.
ExpansibleSet max_expansible(const Permutation& host, int r,
                             const BetaShape& shape);

/// Replace position i by a decreasing consecutive run of run_lengths[i]
/// values (all lengths >= 1); contract(expand(host, ...)) == contract(host).
Permutation expand(const Permutation& host,
                   const std::vector<int>& run_lengths);

struct DegreeReport {
  int r = 0;
  BetaShape shape;
  std::optional<int> exact_degree;  // max expansible size - 1, when computed
  int lower_bound = 0;              // (r-1)(s-2) - 1
  int upper_bound = 0;              // (r-1)^2(s-2) - r, or -1 variant
  ExpansibleSet witness;            // achieving set when exact
  int irreducible_count = 0;
  int max_irreducible_length = 0;
  bool budget_exceeded = false;
};

/// Exact degree of the counting polynomial of Av(12...r, beta_pq): one
/// less than the largest expansible set over all irreducible members.
/// On budget exhaustion the bounds are still reported.
DegreeReport degree_of(int r, const BetaShape& shape,
                       Budget* budget = nullptr);

/// Raised when a constructed witness cannot be verified and exhaustive
/// search finds no substitute, i.e. no irreducible member of the target
/// length carries an expansible set of the target size.
struct DiscrepancyError : std::runtime_error {
  explicit DiscrepancyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// An irreducible member of length (r-1)(2s-5) carrying a verified
/// expansible set of size (r-1)(s-2), built from r-1 interlocking
/// decreasing layers of 2(p+q)-1 points each.  Falls back to exhaustive
/// search if the construction fails verification; throws DiscrepancyError
/// when no such permutation exists (the case r = 2 with p + q >= 2, where
/// the one-layer construction degenerates to a decreasing run and the
/// class has no irreducible member longer than 1).
ExpansibleSet lemma_witness(int r, const BetaShape& shape,
                            Budget* budget = nullptr);

Permutation witness_irreducible(int r, const BetaShape& shape,
                                Budget* budget = nullptr);

}  // namespace permpoly
