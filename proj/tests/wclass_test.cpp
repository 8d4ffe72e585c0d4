#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permpoly/ratpoly.hpp"
#include "permpoly/wclass.hpp"

using namespace permpoly;

namespace {
Permutation P(const std::string& s) { return Permutation::parse(s); }
SignSequence S(const std::string& s) { return SignSequence::parse(s); }
}  // namespace

TEST_CASE("sign sequences") {
  CHECK(S("+-+").signs() == std::vector<int>({1, -1, 1}));
  CHECK(S("+-+").to_string() == "+-+");
  CHECK_THROWS_AS(S(""), std::invalid_argument);
  CHECK_THROWS_AS(S("+x"), std::invalid_argument);
}

TEST_CASE("w-class membership by segmentation") {
  CHECK(in_w_class(P("35178426"), S("++-+")));
  CHECK(in_w_class(Permutation::identity(5), S("+")));
  CHECK_FALSE(in_w_class(P("321"), S("++")));
  CHECK(in_w_class(Permutation(), S("+-")));
  CHECK(in_w_class(P("12"), S("--")));  // two singleton blocks
}

TEST_CASE("w-class membership agrees with the cut scan") {
  const std::vector<SignSequence> signs{S("+"),  S("-"),  S("++"), S("+-"),
                                        S("-+"), S("--"), S("++-"), S("-+-")};
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      if (n == 6 && p[0] > 3) continue;
      for (const auto& eps : signs)
        CHECK(in_w_class(p, eps) == oracle::brute_in_w_class(p, eps));
    }
}

TEST_CASE("w-class membership is closed downward") {
  const SignSequence eps[] = {S("+-"), S("--"), S("-+")};
  for (const auto& host : all_permutations(5))
    for (const auto& pat : all_permutations(3))
      if (involves(pat, host))
        for (const auto& e : eps)
          if (in_w_class(host, e)) CHECK(in_w_class(pat, e));
}

TEST_CASE("layer decomposition") {
  CHECK(layer_decomposition(P("2143")) == std::vector<int>({2, 2}));
  CHECK(layer_decomposition(P("132")) == std::vector<int>({1, 2}));
  CHECK_FALSE(layer_decomposition(P("312")).has_value());
  CHECK(layer_decomposition(Permutation()) == std::vector<int>{});
  CHECK(layer_decomposition(P("1")) == std::vector<int>({1}));

  for (int n = 0; n <= 7; ++n)
    for (const auto& p : all_permutations(n))
      CHECK(layer_decomposition(p) == oracle::brute_layer_decomposition(p));
}

TEST_CASE("the ten classes") {
  CHECK(in_ten_class(P("2143"), TenClass::L2));
  CHECK(in_ten_class(P("3142"), TenClass::WPlusPlusInv));
  CHECK_FALSE(in_ten_class(P("4231"), TenClass::WPlusMinus));
  CHECK(in_ten_class(P("3412"), TenClass::L2Rev));
  CHECK_FALSE(in_ten_class(P("123"), TenClass::WMinusMinus));

  // permutations of length at most 2 are in every class
  for (TenClass c : kTenClasses) {
    CHECK(in_ten_class(P("1"), c));
    CHECK(in_ten_class(P("12"), c));
    CHECK(in_ten_class(P("21"), c));
  }

  for (TenClass c : kTenClasses)
    CHECK(ten_class_from_name(ten_class_name(c)) == c);
  CHECK_FALSE(ten_class_from_name("W??").has_value());
}

TEST_CASE("both layered classes intersect in the three smallest permutations") {
  const std::set<Permutation> expect{P("1"), P("12"), P("21")};
  for (int max_n : {4, 6}) {
    auto got = l2_intersection_check(max_n);
    std::set<Permutation> got_set(got.begin(), got.end());
    CHECK(got_set == expect);
  }
  auto small = l2_intersection_check(1);
  CHECK(std::set<Permutation>(small.begin(), small.end()) ==
        std::set<Permutation>{P("1")});
}

TEST_CASE("pegged pattern construction enforces reduced form") {
  CHECK_NOTHROW(PeggedPattern(P("12"), S("--")));
  CHECK_THROWS_AS(PeggedPattern(P("21"), S("--")), std::invalid_argument);
  CHECK_THROWS_AS(PeggedPattern(P("12"), S("++")), std::invalid_argument);
  CHECK_NOTHROW(PeggedPattern(P("12"), S("+-")));
  CHECK_THROWS_AS(PeggedPattern(P("12"), S("+")), std::invalid_argument);
}

TEST_CASE("inflation") {
  PeggedPattern peg(P("12"), S("--"));
  CHECK(inflate(peg, {2, 2}) == P("2143"));
  CHECK(inflate(peg, {0, 3}) == P("321"));
  CHECK(inflate(peg, {1, 2}) == P("132"));
  CHECK(inflate(PeggedPattern(P("1"), S("+")), {4}) == P("1234"));
  CHECK(inflate(peg, {0, 0}) == Permutation());
  CHECK_THROWS_AS(inflate(peg, {1}), std::invalid_argument);
  CHECK_THROWS_AS(inflate(peg, {-1, 2}), std::invalid_argument);

  // all-minus inflations contract back to at most the skeleton size
  PeggedPattern peg3(P("231"), S("---"));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3 - a; ++c)
        CHECK(contract(inflate(peg3, {a, b, c})).size() <= 3);
}

TEST_CASE("inflation class counting") {
  PeggedPattern peg(P("12"), S("--"));
  CHECK(peg_class_count(peg, 0) == 1);
  CHECK(peg_class_count(PeggedPattern(P("1"), S("+")), 5) == 1);

  // independent check: members of this class are exactly the permutations
  // that split into a low decreasing run followed by a high one
  auto is_member = [](const Permutation& p) {
    const int n = p.size();
    for (int cut = 0; cut <= n; ++cut) {
      bool ok = true;
      for (int i = 0; i + 1 < cut && ok; ++i) ok = p[i] == p[i + 1] + 1;
      if (ok && cut >= 1) ok = p[cut - 1] == 1;
      for (int i = cut; i + 1 < n && ok; ++i) ok = p[i] == p[i + 1] + 1;
      if (ok && cut < n) ok = p[n - 1] == cut + 1;
      if (ok) return true;
    }
    return false;
  };
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t direct = 0;
    for (const auto& p : all_permutations(n))
      if (is_member(p)) ++direct;
    CHECK(peg_class_count(peg, n) == direct);
  }
  CHECK(peg_class_count(peg, 3) == 3);

  // counts never exceed the composition count C(n+m-1, m-1)
  PeggedPattern mixed(P("21"), S("+-"));
  for (int n = 0; n <= 6; ++n)
    CHECK(BigInt(peg_class_count(mixed, n)) <= binomial(BigInt(n + 1), 1));
}
