#pragma once

#include <optional>
#include <vector>

#include "permpoly/basis.hpp"
#include "permpoly/ratpoly.hpp"

namespace permpoly {

/// Counts c_0, c_1, ..., c_N of avoiders by length.
struct CountSequence {
  std::vector<BigInt> counts;

  int max_n() const { return static_cast<int>(counts.size()) - 1; }
  const BigInt& at(int n) const { return counts[static_cast<size_t>(n)]; }
};

/// The length-n members of Av(basis) in lexicographic order, built by
/// inserting the new maximum value into each gap of each length-(n-1)
/// avoider (downward closure makes this complete and duplicate-free).
std::vector<Permutation> generate_avoiders(const Basis& basis, int n,
                                           Budget* budget = nullptr);

/// One generation level: all avoiding extensions of the length-(n-1)
/// avoiders by the new maximum value new_len, sorted.
std::vector<Permutation> extend_avoiders(const std::vector<Permutation>& level,
                                         const Basis& basis, int new_len,
                                         Budget* budget = nullptr);

/// counts[k] = |Av(basis) ∩ S_k| for 0 <= k <= max_n.  Throws
/// BudgetExceeded when the candidate budget runs out.
CountSequence count_avoiders(const Basis& basis, int max_n,
                             Budget* budget = nullptr);

/// Budget-tolerant variant: counts up to the first level that exceeds the
/// budget, flagging the overrun instead of throwing.
struct CappedCounts {
  CountSequence counts;  // levels completed
  bool budget_exceeded = false;
};
CappedCounts count_avoiders_capped(const Basis& basis, int max_n,
                                   Budget* budget);

/// A polynomial that the count sequence eventually agrees with:
/// counts[n] == poly(n) for all threshold <= n <= N.
struct EventualPolynomial {
  RationalPolynomial poly;  // in n
  int threshold = 0;        // least such n0
  int degree = 0;           // difference order (0 for eventually constant)
};

/// Least degree d and least threshold n0 such that the (d+1)-th finite
/// differences vanish on [n0, N-d-1] and the degree-d interpolant through
/// the last d+1 points reproduces counts on [n0, N]; needs a stabilised
/// window of at least d+3 points, otherwise nullopt (insufficient data).
std::optional<EventualPolynomial> fit_eventual_polynomial(
    const CountSequence& seq);

enum class GrowthProbeKind { PolyStabilized, FibonacciDominant, Inconclusive };

struct GrowthProbe {
  GrowthProbeKind kind = GrowthProbeKind::Inconclusive;
  int degree = -1;  // set when kind == PolyStabilized
};

/// Desk-scale dichotomy probe: polynomial fit, else Fibonacci dominance
/// (c_n >= F(n-1) for 5 <= n <= N), else inconclusive.  Sequences with
/// N < 10 are reported inconclusive.
GrowthProbe empirical_growth_probe(const CountSequence& seq);

}  // namespace permpoly
