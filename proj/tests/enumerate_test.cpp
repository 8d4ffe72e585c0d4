#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permpoly/classify.hpp"
#include "permpoly/enumerate.hpp"
#include "permpoly/verify.hpp"

using namespace permpoly;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
Basis B(const std::string& s) { return Basis::parse(s); }

std::vector<BigInt> counts_of(const std::string& basis, int max_n) {
  return count_avoiders(B(basis), max_n).counts;
}
}  // namespace

TEST_CASE("generation matches filtering the symmetric group") {
  auto expect = oracle::sn_avoiders(B("132 321"), 3);
  auto got = generate_avoiders(B("132 321"), 3);
  CHECK(got == expect);
  CHECK(got == std::vector<Permutation>(
                   {P("123"), P("213"), P("231"), P("312")}));

  CHECK(generate_avoiders(B("1"), 3).empty());
  CHECK(generate_avoiders(B("321"), 0) == std::vector<Permutation>{Permutation()});

  for (const std::string& basis : {"132", "123 231", "2143 123"})
    for (int n = 0; n <= 6; ++n)
      CHECK(generate_avoiders(B(basis), n) == oracle::sn_avoiders(B(basis), n));
}

TEST_CASE("every avoider has exactly one parent under max-deletion") {
  // downward closure at n <= 8 for a sample basis: deleting the maximum of
  // each length-n avoider lands on a length-(n-1) avoider, and extension
  // recovers the full level
  const Basis basis = B("132 4321");
  std::vector<Permutation> prev = generate_avoiders(basis, 7);
  std::vector<Permutation> level = generate_avoiders(basis, 8);
  std::set<Permutation> prev_set(prev.begin(), prev.end());
  for (const auto& p : level) {
    std::vector<int> vals;
    for (int v : p.values())
      if (v != p.size()) vals.push_back(v);
    CHECK(prev_set.count(Permutation(std::move(vals))) == 1);
  }
  // and the level sizes match the direct filter at a smaller length
  CHECK(generate_avoiders(basis, 6).size() ==
        oracle::sn_avoiders(basis, 6).size());
}

TEST_CASE("count sequences") {
  CHECK(counts_of("132 321", 4) ==
        std::vector<BigInt>({1, 1, 2, 4, 7}));
  CHECK(counts_of("12", 5) == std::vector<BigInt>({1, 1, 1, 1, 1, 1}));
  CHECK(counts_of("1", 3) == std::vector<BigInt>({1, 0, 0, 0}));
  CHECK(counts_of("123 321", 5) == std::vector<BigInt>({1, 1, 2, 4, 4, 0}));

  // c_n(132, 321) = n(n-1)/2 + 1
  auto seq = counts_of("132 321", 12);
  for (int n = 0; n <= 12; ++n)
    CHECK(seq[static_cast<size_t>(n)] == BigInt(n * (n - 1) / 2 + 1));
}

TEST_CASE("budget errors are explicit") {
  Budget tiny(50);
  CHECK_THROWS_AS(count_avoiders(B("4321"), 8, &tiny), BudgetExceeded);
  Budget tiny2(50);
  CappedCounts cc = count_avoiders_capped(B("4321"), 8, &tiny2);
  CHECK(cc.budget_exceeded);
  CHECK(cc.counts.max_n() < 8);
}

TEST_CASE("eventual polynomial fitting") {
  auto fit = fit_eventual_polynomial(count_avoiders(B("132 321"), 12));
  REQUIRE(fit.has_value());
  CHECK(fit->degree == 2);
  CHECK(fit->threshold == 0);
  CHECK(fit->poly.coeff(0) == Rational(1));
  CHECK(fit->poly.coeff(1) == Rational(-1, 2));
  CHECK(fit->poly.coeff(2) == Rational(1, 2));

  CountSequence ones;
  for (int i = 0; i <= 11; ++i) ones.counts.push_back(1);
  auto cfit = fit_eventual_polynomial(ones);
  REQUIRE(cfit.has_value());
  CHECK(cfit->degree == 0);
  CHECK(cfit->threshold == 0);
  CHECK(cfit->poly == RationalPolynomial::constant(1));

  auto qfit = fit_eventual_polynomial(count_avoiders(B("123 231"), 12));
  REQUIRE(qfit.has_value());
  CHECK(qfit->degree == 2);
  CHECK(qfit->poly.leading() == Rational(1, 2));

  // Catalan counts never stabilise
  CHECK_FALSE(fit_eventual_polynomial(count_avoiders(B("123"), 12)).has_value());

  // too short to certify
  CountSequence tiny;
  tiny.counts = {1, 1, 2};
  CHECK_FALSE(fit_eventual_polynomial(tiny).has_value());
}

TEST_CASE("fitting is stable under truncation") {
  for (const std::string& basis : {"132 321", "123 231", "123 3214"}) {
    auto long_fit = fit_eventual_polynomial(count_avoiders(B(basis), 14));
    auto short_fit = fit_eventual_polynomial(count_avoiders(B(basis), 13));
    REQUIRE(long_fit.has_value());
    REQUIRE(short_fit.has_value());
    CHECK(long_fit->poly == short_fit->poly);
    CHECK(long_fit->threshold == short_fit->threshold);
  }
}

TEST_CASE("fitted polynomials reproduce the counts past the threshold") {
  for (const std::string& basis : {"132 321", "123 231", "213 4312 12543"}) {
    CountSequence seq = count_avoiders(B(basis), 14);
    auto fit = fit_eventual_polynomial(seq);
    REQUIRE(fit.has_value());
    for (int n = fit->threshold; n <= seq.max_n(); ++n) {
      Rational v = fit->poly.eval(Rational(n));
      CHECK(v == Rational(seq.at(n)));
    }
  }
}

TEST_CASE("growth probe") {
  GrowthProbe probe = empirical_growth_probe(count_avoiders(B("123"), 12));
  CHECK(probe.kind == GrowthProbeKind::FibonacciDominant);

  probe = empirical_growth_probe(count_avoiders(B("132 321"), 12));
  CHECK(probe.kind == GrowthProbeKind::PolyStabilized);
  CHECK(probe.degree == 2);

  CountSequence tiny;
  for (int i = 0; i <= 5; ++i) tiny.counts.push_back(1);
  CHECK(empirical_growth_probe(tiny).kind == GrowthProbeKind::Inconclusive);
}

TEST_CASE("polynomial pairs from the shortest members fit quickly") {
  for (const auto& b : sweep_bases(2, {3})) {
    if (!classify(b).polynomial) continue;
    auto fit = fit_eventual_polynomial(count_avoiders(b, 14));
    REQUIRE(fit.has_value());
    CHECK(fit->threshold <= 8);
    CHECK(fit->degree <= 4);
  }
}

TEST_CASE("counting is deterministic and order-independent") {
  auto a = generate_avoiders(B("321 132"), 6);
  auto b = generate_avoiders(B("132 321"), 6);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
}
