#include "permpoly/wclass.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace permpoly {

SignSequence::SignSequence(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("empty sign sequence");
  for (int s : signs_)
    if (s != 1 && s != -1)
      throw std::invalid_argument("signs must be +1 or -1");
}

SignSequence SignSequence::parse(const std::string& text) {
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else throw std::invalid_argument("bad sign sequence: " + text);
  }
  return SignSequence(std::move(signs));
}

std::string SignSequence::to_string() const {
  std::string out;
  for (int s : signs_) out += (s > 0 ? '+' : '-');
  return out;
}

namespace {

bool segment_monotone(const Permutation& p, int from, int to, int sign) {
  for (int i = from; i + 1 < to; ++i) {
    if (sign > 0 && p[i] > p[i + 1]) return false;
    if (sign < 0 && p[i] < p[i + 1]) return false;
  }
  return true;
}

}  // namespace

bool in_w_class(const Permutation& p, const SignSequence& eps) {
  const int n = p.size();
  const int r = eps.size();
  // reach[j] = set of prefix lengths coverable by the first j blocks,
  // as a boolean table.
  std::vector<std::vector<bool>> reach(
      static_cast<size_t>(r) + 1,
      std::vector<bool>(static_cast<size_t>(n) + 1, false));
  reach[0][0] = true;
  for (int j = 1; j <= r; ++j) {
    for (int i = 0; i <= n; ++i) {
      if (!reach[static_cast<size_t>(j - 1)][static_cast<size_t>(i)]) continue;
      for (int e = i; e <= n; ++e) {
        if (!segment_monotone(p, i, e, eps[j - 1])) break;
        reach[static_cast<size_t>(j)][static_cast<size_t>(e)] = true;
      }
    }
  }
  return reach[static_cast<size_t>(r)][static_cast<size_t>(n)];
}

std::optional<std::vector<int>> layer_decomposition(const Permutation& p) {
  std::vector<int> sizes;
  int i = 0, next = 1;
  const int n = p.size();
  while (i < n) {
    if (p[i] == next) {
      sizes.push_back(1);
      i += 1;
      next += 1;
    } else if (p[i] == next + 1 && i + 1 < n && p[i + 1] == next) {
      sizes.push_back(2);
      i += 2;
      next += 2;
    } else {
      return std::nullopt;
    }
  }
  return sizes;
}

bool in_l2(const Permutation& p) { return layer_decomposition(p).has_value(); }

bool in_l2r(const Permutation& p) { return in_l2(reverse(p)); }

const char* ten_class_name(TenClass c) {
  switch (c) {
    case TenClass::WPlusPlus: return "W++";
    case TenClass::WPlusMinus: return "W+-";
    case TenClass::WMinusPlus: return "W-+";
    case TenClass::WMinusMinus: return "W--";
    case TenClass::WPlusPlusInv: return "W++inv";
    case TenClass::WPlusMinusInv: return "W+-inv";
    case TenClass::WMinusPlusInv: return "W-+inv";
    case TenClass::WMinusMinusInv: return "W--inv";
    case TenClass::L2: return "L2";
    case TenClass::L2Rev: return "L2R";
  }
  return "?";
}

std::optional<TenClass> ten_class_from_name(const std::string& name) {
  for (TenClass c : kTenClasses)
    if (name == ten_class_name(c)) return c;
  return std::nullopt;
}

bool in_ten_class(const Permutation& p, TenClass c) {
  static const SignSequence pp({1, 1}), pm({1, -1}), mp({-1, 1}), mm({-1, -1});
  switch (c) {
    case TenClass::WPlusPlus: return in_w_class(p, pp);
    case TenClass::WPlusMinus: return in_w_class(p, pm);
    case TenClass::WMinusPlus: return in_w_class(p, mp);
    case TenClass::WMinusMinus: return in_w_class(p, mm);
    case TenClass::WPlusPlusInv: return in_w_class(inverse(p), pp);
    case TenClass::WPlusMinusInv: return in_w_class(inverse(p), pm);
    case TenClass::WMinusPlusInv: return in_w_class(inverse(p), mp);
    case TenClass::WMinusMinusInv: return in_w_class(inverse(p), mm);
    case TenClass::L2: return in_l2(p);
    case TenClass::L2Rev: return in_l2r(p);
  }
  return false;
}

std::vector<Permutation> l2_intersection_check(int max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  std::vector<Permutation> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& p : all_permutations(n))
      if (in_l2(p) && in_l2r(p)) out.push_back(p);
  return out;
}

PeggedPattern::PeggedPattern(Permutation skeleton, SignSequence signs)
    : skeleton_(std::move(skeleton)), signs_(std::move(signs)) {
  if (skeleton_.size() != signs_.size())
    throw std::invalid_argument("one sign per skeleton point required");
  for (int i = 0; i + 1 < skeleton_.size(); ++i) {
    if (skeleton_[i + 1] == skeleton_[i] + 1 && signs_[i] == 1 &&
        signs_[i + 1] == 1)
      throw std::invalid_argument("not reduced: adjacent ascent with ++");
    if (skeleton_[i + 1] == skeleton_[i] - 1 && signs_[i] == -1 &&
        signs_[i + 1] == -1)
      throw std::invalid_argument("not reduced: adjacent descent with --");
  }
}

Permutation inflate(const PeggedPattern& peg, const std::vector<int>& lengths) {
  const int m = peg.skeleton().size();
  if (static_cast<int>(lengths.size()) != m)
    throw std::invalid_argument("one run length per skeleton point required");
  for (int l : lengths)
    if (l < 0) throw std::invalid_argument("run lengths must be >= 0");
  // Value interval per point, allocated in skeleton-value order.
  std::vector<int> base(static_cast<size_t>(m), 0);
  std::vector<int> by_value(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i)
    by_value[static_cast<size_t>(peg.skeleton()[i] - 1)] = i;
  int next = 1;
  for (int v = 0; v < m; ++v) {
    const int i = by_value[static_cast<size_t>(v)];
    base[static_cast<size_t>(i)] = next;
    next += lengths[static_cast<size_t>(i)];
  }
  std::vector<int> vals;
  for (int i = 0; i < m; ++i) {
    const int len = lengths[static_cast<size_t>(i)];
    const int lo = base[static_cast<size_t>(i)];
    if (peg.signs()[i] > 0) {
      for (int t = 0; t < len; ++t) vals.push_back(lo + t);
    } else {
      for (int t = len - 1; t >= 0; --t) vals.push_back(lo + t);
    }
  }
  return Permutation(std::move(vals));
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int take = 0; take <= total; ++take) {
    cur.push_back(take);
    compositions(total - take, parts - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t peg_class_count(const PeggedPattern& peg, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const int m = peg.skeleton().size();
  std::set<Permutation> seen;
  std::vector<int> cur;
  compositions(n, m, cur, [&](const std::vector<int>& lengths) {
    seen.insert(inflate(peg, lengths));
  });
  return seen.size();
}

}  // namespace permpoly
