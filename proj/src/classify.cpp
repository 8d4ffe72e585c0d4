#include "permpoly/classify.hpp"

#include <algorithm>

namespace permpoly {

GrowthVerdict classify(const Basis& basis) {
  GrowthVerdict v;
  for (TenClass c : kTenClasses) {
    bool hit = false;
    for (const auto& m : basis.members())
      if (in_ten_class(m, c)) {
        hit = true;
        break;
      }
    if (!hit) v.uncovered.push_back(c);
  }
  v.polynomial = v.uncovered.empty();
  return v;
}

namespace {

int doubleton_layers(const std::vector<int>& sizes) {
  return static_cast<int>(std::count(sizes.begin(), sizes.end(), 2));
}

// Reversed-layered with exactly one layer of size 2 ("almost decreasing").
bool almost_decreasing(const Permutation& p) {
  auto layers = layer_decomposition(reverse(p));
  return layers && doubleton_layers(*layers) == 1;
}

// Reversed-layered with at least two layers of size 2; equivalently a
// reversed-layered permutation involving 3412.
bool l2r_with_3412(const Permutation& p) {
  static const Permutation probe(std::vector<int>{3, 4, 1, 2});
  return in_l2r(p) && involves(probe, p);
}

// m(m-1)...(j+2) j(j+1) (j-1)...1 for some 2 <= j <= m-2: decreasing with
// one adjacent ascent strictly in the middle of the value range.
bool mid_doubleton_form(const Permutation& p) {
  const int m = p.size();
  for (int j = 2; j + 2 <= m; ++j) {
    std::vector<int> v;
    for (int t = m; t >= j + 2; --t) v.push_back(t);
    v.push_back(j);
    v.push_back(j + 1);
    for (int t = j - 1; t >= 1; --t) v.push_back(t);
    if (Permutation(std::move(v)) == p) return true;
  }
  return false;
}

// m(m-1)...312
bool end_doubleton_form(const Permutation& p) {
  const int m = p.size();
  if (m < 3) return false;
  std::vector<int> v;
  for (int t = m; t >= 3; --t) v.push_back(t);
  v.push_back(1);
  v.push_back(2);
  return Permutation(std::move(v)) == p;
}

// 12...k n(n-1)...(k+1) for some k
bool incr_then_top_decr(const Permutation& p) {
  const int n = p.size();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> v;
    for (int t = 1; t <= k; ++t) v.push_back(t);
    for (int t = n; t >= k + 1; --t) v.push_back(t);
    if (Permutation(std::move(v)) == p) return true;
  }
  return false;
}

// 1 n(n-1)...2
bool one_then_decr(const Permutation& p) {
  const int n = p.size();
  if (n < 1) return false;
  std::vector<int> v{1};
  for (int t = n; t >= 2; --t) v.push_back(t);
  return Permutation(std::move(v)) == p;
}

// 21345...s
bool swap_first_two_form(const Permutation& p) {
  const int n = p.size();
  if (n < 2) return false;
  std::vector<int> v{2, 1};
  for (int t = 3; t <= n; ++t) v.push_back(t);
  return Permutation(std::move(v)) == p;
}

bool is_213(const Permutation& p) {
  static const Permutation probe(std::vector<int>{2, 1, 3});
  return p == probe;
}

bool w_pm(const Permutation& p) {
  static const SignSequence pm({1, -1});
  return in_w_class(p, pm);
}

bool w_mm_both(const Permutation& p) {
  static const SignSequence mm({-1, -1});
  return in_w_class(p, mm) && in_w_class(inverse(p), mm);
}

std::optional<std::string> match_two_case(const Permutation& a,
                                          const Permutation& b) {
  if (is_increasing(a) && is_decreasing(b)) return "1";
  if (is_increasing(a) && almost_decreasing(b)) return "2";
  return std::nullopt;
}

void require_matchable(const Basis& basis, int want) {
  if (basis.size() != want)
    throw std::invalid_argument("matcher needs a basis of exactly " +
                                std::to_string(want) + " permutations");
  for (const auto& m : basis.members())
    if (m.size() < 3)
      throw std::invalid_argument(
          "matcher needs members of length at least 3");
}

// Case 2b of the three-restriction matcher defers to the two-restriction
// characterisation, which searches its own symmetries.
bool two_basis_polynomial(const Permutation& a, const Permutation& b) {
  for (Symmetry s : kAllSymmetries) {
    const Permutation sa = apply_symmetry(s, a);
    const Permutation sb = apply_symmetry(s, b);
    if (match_two_case(sa, sb) || match_two_case(sb, sa)) return true;
  }
  return false;
}

std::vector<CaseLabel> match_two_impl(const Basis& basis, bool all) {
  require_matchable(basis, 2);
  std::vector<CaseLabel> out;
  for (Symmetry s : kAllSymmetries) {
    Basis img = apply_symmetry(s, basis);
    const auto& m = img.members();
    const int order[2][2] = {{0, 1}, {1, 0}};
    for (const auto& idx : order) {
      const Permutation& a = m[static_cast<size_t>(idx[0])];
      const Permutation& b = m[static_cast<size_t>(idx[1])];
      if (auto path = match_two_case(a, b)) {
        out.push_back(CaseLabel{2, *path, s, {a, b}});
        if (!all) return out;
      }
    }
  }
  return out;
}

bool two_basis_polynomial(const Permutation& a, const Permutation& b);

std::optional<std::string> match_three_case(const Permutation& a,
                                            const Permutation& b,
                                            const Permutation& g) {
  if (is_213(a)) {
    if (l2r_with_3412(b) && incr_then_top_decr(g)) return "1a";
    if (mid_doubleton_form(b) && incr_then_top_decr(g)) return "1b";
    if (end_doubleton_form(b) && w_pm(g)) return "1c";
  }
  if (is_increasing(a)) {
    if (l2r_with_3412(b) && w_mm_both(g)) return "2a";
    if (two_basis_polynomial(a, b)) return "2b";
  }
  if (swap_first_two_form(a)) {
    if (l2r_with_3412(b) && one_then_decr(g)) return "3a";
    if (mid_doubleton_form(b) && incr_then_top_decr(g)) return "3b";
    if (end_doubleton_form(b) && w_pm(g)) return "3c";
  }
  return std::nullopt;
}

std::vector<CaseLabel> match_three_impl(const Basis& basis, bool all) {
  require_matchable(basis, 3);
  std::vector<CaseLabel> out;
  static const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (Symmetry s : kAllSymmetries) {
    Basis img = apply_symmetry(s, basis);
    const auto& m = img.members();
    for (const auto& idx : orders) {
      const Permutation& a = m[static_cast<size_t>(idx[0])];
      const Permutation& b = m[static_cast<size_t>(idx[1])];
      const Permutation& g = m[static_cast<size_t>(idx[2])];
      if (auto path = match_three_case(a, b, g)) {
        out.push_back(CaseLabel{3, *path, s, {a, b, g}});
        if (!all) return out;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<CaseLabel> match_two_basis(const Basis& basis) {
  auto found = match_two_impl(basis, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<CaseLabel> match_two_basis_all(const Basis& basis) {
  return match_two_impl(basis, true);
}

std::optional<CaseLabel> match_three_basis(const Basis& basis) {
  auto found = match_three_impl(basis, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<CaseLabel> match_three_basis_all(const Basis& basis) {
  return match_three_impl(basis, true);
}

}  // namespace permpoly
