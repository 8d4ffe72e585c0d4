#pragma once

// Test-only reference implementations, kept independent of the library's
// algorithmic choices: plain subsequence scans and exhaustive searches.

#include <optional>
#include <vector>

#include "permpoly/basis.hpp"
#include "permpoly/degree.hpp"
#include "permpoly/perm.hpp"
#include "permpoly/wclass.hpp"

namespace permpoly::oracle {

// Involvement by scanning every k-element subsequence.
inline bool naive_involves(const Permutation& pattern,
                           const Permutation& host) {
  const int k = pattern.size();
  const int n = host.size();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> idx(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int pos, int start) -> bool {
    if (pos == k) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(host[i]);
      return pattern_of(sub) == pattern;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      idx[static_cast<size_t>(pos)] = i;
      if (self(self, pos + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool naive_avoids(const Permutation& host, const Basis& basis) {
  for (const auto& b : basis.members())
    if (naive_involves(b, host)) return false;
  return true;
}

// W-class membership by trying every way to cut the word into blocks.
inline bool brute_in_w_class(const Permutation& p, const SignSequence& eps) {
  const int n = p.size();
  const int r = eps.size();
  std::vector<int> cuts(static_cast<size_t>(r) + 1, 0);
  cuts[static_cast<size_t>(r)] = n;
  auto monotone = [&](int from, int to, int sign) {
    for (int i = from; i + 1 < to; ++i) {
      if (sign > 0 && p[i] > p[i + 1]) return false;
      if (sign < 0 && p[i] < p[i + 1]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int block) -> bool {
    if (block == r) {
      for (int b = 0; b < r; ++b)
        if (!monotone(cuts[static_cast<size_t>(b)],
                      cuts[static_cast<size_t>(b + 1)], eps[b]))
          return false;
      return true;
    }
    for (int c = cuts[static_cast<size_t>(block - 1)]; c <= n; ++c) {
      cuts[static_cast<size_t>(block)] = c;
      if (self(self, block + 1)) return true;
    }
    return false;
  };
  if (r == 0) return n == 0;
  return rec(rec, 1);
}

// Layered decomposition by trying every composition into parts of 1 and 2.
inline std::optional<std::vector<int>> brute_layer_decomposition(
    const Permutation& p) {
  const int n = p.size();
  std::vector<int> sizes;
  auto rec = [&](auto&& self, int pos, int next) -> bool {
    if (pos == n) return true;
    if (p[pos] == next) {
      sizes.push_back(1);
      if (self(self, pos + 1, next + 1)) return true;
      sizes.pop_back();
    }
    if (pos + 1 < n && p[pos] == next + 1 && p[pos + 1] == next) {
      sizes.push_back(2);
      if (self(self, pos + 2, next + 2)) return true;
      sizes.pop_back();
    }
    return false;
  };
  if (rec(rec, 0, 1)) return sizes;
  return std::nullopt;
}

// Avoiders by filtering the full symmetric group.
inline std::vector<Permutation> sn_avoiders(const Basis& basis, int n) {
  std::vector<Permutation> out;
  if (n == 0) {
    if (naive_avoids(Permutation(), basis)) out.push_back(Permutation());
    return out;
  }
  for (const auto& p : all_permutations(n))
    if (naive_avoids(p, basis)) out.push_back(p);
  return out;
}

// Expanding the selected points to runs of the given length and testing
// class membership directly.
inline bool expansion_stays_in_class(const Permutation& host,
                                     const std::vector<int>& positions,
                                     int r, const BetaShape& shape,
                                     int run_len) {
  std::vector<int> runs(static_cast<size_t>(host.size()), 1);
  for (int i : positions) runs[static_cast<size_t>(i)] = run_len;
  return in_degree_class(expand(host, runs), r, shape);
}

// Maximum subset that survives simultaneous expansion to runs of length
// run_len (a finite stand-in for expansibility; subsets of a passing set
// pass, so only the size matters).
inline int brute_max_expansible_size(const Permutation& host, int r,
                                     const BetaShape& shape, int run_len) {
  const int n = host.size();
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) positions.push_back(i);
    if (static_cast<int>(positions.size()) <= best) continue;
    if (expansion_stays_in_class(host, positions, r, shape, run_len))
      best = static_cast<int>(positions.size());
  }
  return best;
}

}  // namespace permpoly::oracle
