#include "permpoly/enumerate.hpp"

#include <algorithm>

namespace permpoly {

namespace {

// Candidates are parent avoiders with the new maximum inserted, so any
// new occurrence of a forbidden pattern must use the inserted point in
// the role of the pattern's maximum value.
bool candidate_avoids(const Permutation& cand, const Basis& basis,
                      int inserted_pos) {
  for (const auto& b : basis.members()) {
    if (b.empty()) return false;
    int max_pos = 0;
    for (int i = 1; i < b.size(); ++i)
      if (b[i] > b[max_pos]) max_pos = i;
    if (involves_at(b, cand, max_pos, inserted_pos)) return false;
  }
  return true;
}

std::vector<Permutation> level_zero(const Basis& basis) {
  Permutation empty;
  if (avoids_basis(empty, basis)) return {empty};
  return {};
}

}  // namespace

std::vector<Permutation> extend_avoiders(const std::vector<Permutation>& prev,
                                         const Basis& basis, int new_len,
                                         Budget* budget) {
  std::vector<Permutation> out;
  for (const auto& parent : prev) {
    for (int gap = 0; gap <= parent.size(); ++gap) {
      if (budget) budget->charge();
      std::vector<int> vals = parent.values();
      vals.insert(vals.begin() + gap, new_len);
      Permutation cand(std::move(vals));
      if (candidate_avoids(cand, basis, gap)) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> generate_avoiders(const Basis& basis, int n,
                                           Budget* budget) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Permutation> level = level_zero(basis);
  for (int len = 1; len <= n; ++len)
    level = extend_avoiders(level, basis, len, budget);
  return level;
}

CountSequence count_avoiders(const Basis& basis, int max_n, Budget* budget) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  CountSequence seq;
  std::vector<Permutation> level = level_zero(basis);
  seq.counts.push_back(static_cast<int>(level.size()));
  for (int len = 1; len <= max_n; ++len) {
    level = extend_avoiders(level, basis, len, budget);
    seq.counts.push_back(static_cast<int>(level.size()));
  }
  return seq;
}

CappedCounts count_avoiders_capped(const Basis& basis, int max_n,
                                   Budget* budget) {
  CappedCounts out;
  try {
    std::vector<Permutation> level = level_zero(basis);
    out.counts.counts.push_back(static_cast<int>(level.size()));
    for (int len = 1; len <= max_n; ++len) {
      level = extend_avoiders(level, basis, len, budget);
      out.counts.counts.push_back(static_cast<int>(level.size()));
    }
  } catch (const BudgetExceeded&) {
    out.budget_exceeded = true;
  }
  return out;
}

namespace {

std::vector<BigInt> differences(const std::vector<BigInt>& v) {
  std::vector<BigInt> out;
  for (size_t i = 0; i + 1 < v.size(); ++i) out.push_back(v[i + 1] - v[i]);
  return out;
}

// Newton forward interpolation through (base, vals[0]), (base+1, vals[1]),
// ..., expanded into standard-basis coefficients.
RationalPolynomial newton_interpolant(int base,
                                      const std::vector<BigInt>& vals) {
  std::vector<std::vector<BigInt>> diff{vals};
  while (diff.back().size() > 1) diff.push_back(differences(diff.back()));

  RationalPolynomial out;
  RationalPolynomial basis_poly = RationalPolynomial::constant(1);
  for (size_t t = 0; t < diff.size(); ++t) {
    Rational c(diff[t][0]);
    c /= Rational(factorial(static_cast<int>(t)));
    out = out + basis_poly * c;
    // extend falling factorial: (n - base - t)
    RationalPolynomial lin(
        std::vector<Rational>{Rational(-(base + static_cast<int>(t))),
                              Rational(1)});
    basis_poly = basis_poly * lin;
  }
  return out;
}

}  // namespace

std::optional<EventualPolynomial> fit_eventual_polynomial(
    const CountSequence& seq) {
  const int N = seq.max_n();
  if (N < 0) return std::nullopt;
  for (int d = 0; d <= N; ++d) {
    // (d+1)-th differences at n exist for n <= N-d-1
    std::vector<BigInt> diff = seq.counts;
    for (int t = 0; t <= d; ++t) diff = differences(diff);
    if (diff.empty()) break;
    int n0 = static_cast<int>(diff.size());  // least n with zero tail
    while (n0 > 0 && diff[static_cast<size_t>(n0 - 1)] == 0) --n0;
    if (n0 == static_cast<int>(diff.size())) continue;  // no zero tail
    if (N - n0 + 1 < d + 3) continue;  // too few stabilised points
    std::vector<BigInt> tail(seq.counts.end() - (d + 1), seq.counts.end());
    RationalPolynomial poly = newton_interpolant(N - d, tail);
    bool ok = true;
    for (int n = n0; n <= N && ok; ++n)
      ok = poly.eval(Rational(n)) == Rational(seq.at(n));
    if (!ok) continue;
    EventualPolynomial out;
    out.poly = poly;
    out.threshold = n0;
    out.degree = d;
    return out;
  }
  return std::nullopt;
}

GrowthProbe empirical_growth_probe(const CountSequence& seq) {
  GrowthProbe probe;
  const int N = seq.max_n();
  if (N < 10) return probe;
  if (auto fit = fit_eventual_polynomial(seq)) {
    probe.kind = GrowthProbeKind::PolyStabilized;
    probe.degree = fit->degree;
    return probe;
  }
  bool dominant = true;
  for (int n = 5; n <= N && dominant; ++n)
    dominant = seq.at(n) >= fibonacci(n - 1);
  if (dominant) probe.kind = GrowthProbeKind::FibonacciDominant;
  return probe;
}

}  // namespace permpoly
