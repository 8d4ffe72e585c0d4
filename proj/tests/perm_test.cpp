#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "permpoly/perm.hpp"

using namespace permpoly;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
}  // namespace

TEST_CASE("construction validates one-line notation") {
  CHECK_NOTHROW(Permutation(std::vector<int>{}));
  CHECK_NOTHROW(Permutation(std::vector<int>{2, 5, 1, 3, 4}));
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("text round-trip") {
  CHECK(P("25134").values() == std::vector<int>({2, 5, 1, 3, 4}));
  CHECK(P("1.2.11.3.4.5.6.7.8.9.10").size() == 11);
  CHECK(P("25134").to_string() == "25134");
  Permutation big = Permutation::identity(11);
  CHECK(big.to_string() == "1.2.3.4.5.6.7.8.9.10.11");
  CHECK(Permutation::parse(big.to_string()) == big);
  CHECK_THROWS_AS(P("250"), std::invalid_argument);
  CHECK_THROWS_AS(P("2.x.1"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);  // empty token is not valid
}

TEST_CASE("pattern_of relabels to 1..n") {
  CHECK(pattern_of(std::vector<int>{5, 1, 3}) == P("312"));
  CHECK(pattern_of(std::vector<int>{}) == Permutation());
  CHECK_THROWS_AS(pattern_of(std::vector<int>{2, 2}), std::invalid_argument);

  // dropping the last key of 261534 and flattening gives 25143
  std::vector<int> parent{2, 6, 1, 5, 3};
  CHECK(pattern_of(parent) == P("25143"));

  // idempotent on permutations
  for (const auto& p : all_permutations(4))
    CHECK(pattern_of(p.values()) == p);
}

TEST_CASE("involvement basics") {
  CHECK(involves(P("312"), P("25134")));
  CHECK_FALSE(involves(P("321"), P("25134")));
  CHECK(involves(P("1"), P("1")));
  CHECK_FALSE(involves(P("1"), Permutation()));
  CHECK(involves(Permutation(), P("1")));
  CHECK(involves(Permutation(), Permutation()));
  for (const auto& p : all_permutations(4)) CHECK(involves(p, p));
}

TEST_CASE("involvement agrees with the subsequence scan") {
  for (int pn = 1; pn <= 3; ++pn)
    for (const auto& pat : all_permutations(pn))
      for (int hn = 1; hn <= 6; ++hn)
        for (const auto& host : all_permutations(hn))
          CHECK(involves(pat, host) == oracle::naive_involves(pat, host));
  // spot checks at length 4 patterns
  for (const auto& pat : all_permutations(4))
    for (const auto& host : all_permutations(6))
      if (host.values()[0] % 3 == 0)
        CHECK(involves(pat, host) == oracle::naive_involves(pat, host));
}

TEST_CASE("pinned involvement matches filtered scan") {
  const Permutation pat = P("231");
  for (const auto& host : all_permutations(5)) {
    for (int hp = 0; hp < 5; ++hp) {
      bool naive = false;
      // scan subsequences through position hp in the middle role
      const int k = 3;
      for (int a = 0; a < 5 && !naive; ++a)
        for (int b = a + 1; b < 5 && !naive; ++b)
          for (int c = b + 1; c < 5 && !naive; ++c) {
            int pos[3] = {a, b, c};
            if (pos[1] != hp) continue;
            std::vector<int> sub{host[a], host[b], host[c]};
            naive = pattern_of(sub) == pat;
          }
      (void)k;
      CHECK(involves_at(pat, host, 1, hp) == naive);
    }
  }
}

TEST_CASE("symmetries") {
  CHECK(reverse(P("132")) == P("231"));
  CHECK(inverse(P("312")) == P("231"));
  CHECK(complement(P("123")) == P("321"));

  for (const auto& p : all_permutations(5)) {
    if (p[0] != 2) continue;  // a slice is enough at length 5
    for (Symmetry s : kAllSymmetries)
      CHECK(apply_symmetry(inverse_symmetry(s), apply_symmetry(s, p)) == p);
  }
  for (const auto& p : all_permutations(4))
    for (Symmetry s : kAllSymmetries)
      CHECK(apply_symmetry(inverse_symmetry(s), apply_symmetry(s, p)) == p);

  // involvement is preserved under simultaneous application
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(5)) {
      if (b[0] != 1) continue;
      for (Symmetry s : kAllSymmetries)
        CHECK(involves(a, b) ==
              involves(apply_symmetry(s, a), apply_symmetry(s, b)));
    }
}

TEST_CASE("irreducibility and contraction") {
  CHECK(is_irreducible(P("1342")));
  CHECK_FALSE(is_irreducible(P("21")));
  CHECK(is_irreducible(Permutation()));
  CHECK(is_irreducible(P("1")));

  CHECK(contract(P("21654873")) == P("1342"));
  CHECK(contract(P("123")) == P("123"));
  CHECK(contract(P("21")) == P("1"));
  CHECK(contract(Permutation()) == Permutation());

  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_permutations(n)) {
      if (n == 7 && p[0] != 4) continue;
      CHECK(is_irreducible(contract(p)));
    }
}

TEST_CASE("contraction fixpoint does not depend on the collapse order") {
  // right-to-left single collapses as the alternative strategy
  auto contract_rtl = [](const Permutation& p) {
    std::vector<int> v = p.values();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = static_cast<int>(v.size()) - 2; i >= 0; --i) {
        if (v[static_cast<size_t>(i)] == v[static_cast<size_t>(i + 1)] + 1) {
          int removed = v[static_cast<size_t>(i + 1)];
          v.erase(v.begin() + i + 1);
          for (int& x : v)
            if (x > removed) --x;
          changed = true;
          break;
        }
      }
    }
    return Permutation(std::move(v));
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n))
      CHECK(contract(p) == contract_rtl(p));
}

TEST_CASE("expansion counts partition the symmetric group by contraction") {
  CHECK(expansion_count(1, 5) == 1);
  CHECK(expansion_count(4, 8) == 35);
  CHECK(expansion_count(3, 3) == 1);
  CHECK(expansion_count(0, 0) == 1);
  CHECK_THROWS_AS(expansion_count(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(expansion_count(0, 2), std::invalid_argument);

  for (int n = 1; n <= 7; ++n) {
    std::map<Permutation, std::uint64_t> groups;
    for (const auto& p : all_permutations(n)) ++groups[contract(p)];
    for (const auto& [irr, count] : groups) {
      CHECK(is_irreducible(irr));
      CHECK(count == expansion_count(irr.size(), n));
    }
  }
}

TEST_CASE("monotone helpers") {
  CHECK(is_increasing(P("1234")));
  CHECK_FALSE(is_increasing(P("1243")));
  CHECK(is_decreasing(P("4321")));
  CHECK(is_increasing(Permutation()));
  CHECK(longest_decreasing(P("25134")) == 2);
  CHECK(longest_decreasing(P("4321")) == 4);
  CHECK(longest_increasing(P("25134")) == 3);
}
