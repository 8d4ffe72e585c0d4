#include "permpoly/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permpoly {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : vals_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("not a rearrangement of 1..n");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty())
    throw std::invalid_argument("empty permutation token");
  std::vector<int> vals;
  if (text.find('.') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '.')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad permutation token: " + text);
      vals.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad permutation token: " + text);
      vals.push_back(c - '0');
    }
  }
  return Permutation(std::move(vals));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool dotted = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (dotted && i > 0) out += '.';
    out += std::to_string(vals_[static_cast<size_t>(i)]);
  }
  return out;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  return vals_ <=> o.vals_;
}

const char* symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Identity: return "id";
    case Symmetry::Reverse: return "r";
    case Symmetry::Complement: return "c";
    case Symmetry::ReverseComplement: return "rc";
    case Symmetry::Inverse: return "i";
    case Symmetry::InverseReverse: return "ir";
    case Symmetry::InverseComplement: return "ic";
    case Symmetry::InverseReverseComplement: return "irc";
  }
  return "?";
}

Symmetry inverse_symmetry(Symmetry s) {
  // reverse, complement and inverse are involutions; the group relations
  // r∘i = i∘c and c∘i = i∘r give the two non-self-inverse elements.
  switch (s) {
    case Symmetry::InverseReverse: return Symmetry::InverseComplement;
    case Symmetry::InverseComplement: return Symmetry::InverseReverse;
    default: return s;
  }
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n + 1 - p[i];
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(p[i] - 1)] = i + 1;
  return Permutation(std::move(v));
}

Permutation apply_symmetry(Symmetry s, const Permutation& p) {
  switch (s) {
    case Symmetry::Identity: return p;
    case Symmetry::Reverse: return reverse(p);
    case Symmetry::Complement: return complement(p);
    case Symmetry::ReverseComplement: return reverse(complement(p));
    case Symmetry::Inverse: return inverse(p);
    case Symmetry::InverseReverse: return inverse(reverse(p));
    case Symmetry::InverseComplement: return inverse(complement(p));
    case Symmetry::InverseReverseComplement:
      return inverse(reverse(complement(p)));
  }
  return p;
}

namespace {

// Backtracking point-to-point matcher.  pin_pat/pin_host force one
// assignment (-1 disables).  For each pattern position the candidate
// host value only has to sit strictly between the host values already
// chosen for the pattern's value-predecessor and value-successor, so
// the consistency test is O(1) once those neighbour indices are known.
struct Matcher {
  const std::vector<int>& pat;
  const std::vector<int>& host;
  int k, n;
  int pin_pat, pin_host;
  std::vector<int> pred, succ;   // value-neighbour indices among pat prefix
  std::vector<int> chosen;       // host index per matched pattern position

  Matcher(const Permutation& pattern, const Permutation& h, int pp, int ph)
      : pat(pattern.values()),
        host(h.values()),
        k(pattern.size()),
        n(h.size()),
        pin_pat(pp),
        pin_host(ph),
        pred(static_cast<size_t>(k), -1),
        succ(static_cast<size_t>(k), -1),
        chosen(static_cast<size_t>(k), -1) {
    for (int i = 0; i < k; ++i) {
      for (int t = 0; t < i; ++t) {
        if (pat[static_cast<size_t>(t)] < pat[static_cast<size_t>(i)]) {
          if (pred[static_cast<size_t>(i)] == -1 ||
              pat[static_cast<size_t>(t)] >
                  pat[static_cast<size_t>(pred[static_cast<size_t>(i)])])
            pred[static_cast<size_t>(i)] = t;
        } else {
          if (succ[static_cast<size_t>(i)] == -1 ||
              pat[static_cast<size_t>(t)] <
                  pat[static_cast<size_t>(succ[static_cast<size_t>(i)])])
            succ[static_cast<size_t>(i)] = t;
        }
      }
    }
  }

  bool feasible(int pi, int j) const {
    const int v = host[static_cast<size_t>(j)];
    if (int t = pred[static_cast<size_t>(pi)]; t != -1) {
      if (v <= host[static_cast<size_t>(chosen[static_cast<size_t>(t)])])
        return false;
    }
    if (int t = succ[static_cast<size_t>(pi)]; t != -1) {
      if (v >= host[static_cast<size_t>(chosen[static_cast<size_t>(t)])])
        return false;
    }
    return true;
  }

  bool search(int pi, int start) {
    if (pi == k) return true;
    if (pin_pat == pi) {
      if (pin_host < start || pin_host > n - (k - pi)) return false;
      if (!feasible(pi, pin_host)) return false;
      chosen[static_cast<size_t>(pi)] = pin_host;
      return search(pi + 1, pin_host + 1);
    }
    int limit = n - (k - pi - 1);
    if (pin_pat > pi) limit = std::min(limit, pin_host - (pin_pat - pi - 1));
    for (int j = start; j < limit; ++j) {
      if (!feasible(pi, j)) continue;
      chosen[static_cast<size_t>(pi)] = j;
      if (search(pi + 1, j + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool involves(const Permutation& pattern, const Permutation& host) {
  if (pattern.size() > host.size()) return false;
  if (pattern.empty()) return true;
  Matcher m(pattern, host, -1, -1);
  return m.search(0, 0);
}

bool involves_at(const Permutation& pattern, const Permutation& host,
                 int pat_pos, int host_pos) {
  if (pattern.size() > host.size()) return false;
  if (pattern.empty()) return true;
  Matcher m(pattern, host, pat_pos, host_pos);
  return m.search(0, 0);
}

bool is_increasing(const Permutation& p) {
  return std::is_sorted(p.values().begin(), p.values().end());
}

bool is_decreasing(const Permutation& p) {
  return std::is_sorted(p.values().rbegin(), p.values().rend());
}

int longest_decreasing(const Permutation& p) {
  const int n = p.size();
  std::vector<int> best(static_cast<size_t>(n), 1);
  int out = n == 0 ? 0 : 1;
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < i; ++t)
      if (p[t] > p[i])
        best[static_cast<size_t>(i)] =
            std::max(best[static_cast<size_t>(i)],
                     best[static_cast<size_t>(t)] + 1);
    out = std::max(out, best[static_cast<size_t>(i)]);
  }
  return out;
}

int longest_increasing(const Permutation& p) {
  return longest_decreasing(complement(p));
}

bool is_irreducible(const Permutation& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1] + 1) return false;
  return true;
}

Permutation contract(const Permutation& p) {
  std::vector<int> v = p.values();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1] + 1) {
        const int removed = v[i + 1];
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        for (int& x : v)
          if (x > removed) --x;
        changed = true;
        break;
      }
    }
  }
  return Permutation(std::move(v));
}

std::uint64_t expansion_count(int m, int n) {
  if (m == 0 && n == 0) return 1;
  if (m < 1 || m > n)
    throw std::invalid_argument("expansion_count: need 1 <= m <= n");
  // C(n-1, m-1)
  std::uint64_t out = 1;
  int k = std::min(m - 1, n - m);
  for (int i = 1; i <= k; ++i)
    out = out * static_cast<std::uint64_t>(n - 1 - k + i) /
          static_cast<std::uint64_t>(i);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(std::vector<int>(v)));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace permpoly
