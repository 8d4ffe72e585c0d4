#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permpoly {

/// A permutation of {1, ..., n} in one-line notation.  The empty
/// permutation (n = 0) is a valid value.
class Permutation {
public:
  Permutation() = default;

  /// Construct from one-line notation.  Throws std::invalid_argument if
  /// the values are not a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  /// Parse the text form: a digit string ("25134") when n <= 9, or
  /// dot-separated values ("1.2.11.3") when any value is >= 10.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }

  /// 0-based position, 1-based value.
  int operator[](int i) const { return vals_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return vals_; }

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

  /// Shortlex: by length first, then lexicographically by values.
  std::strong_ordering operator<=>(const Permutation& o) const;

private:
  std::vector<int> vals_;
};

/// The eight symmetries generated by reverse, complement and inverse.
/// Composite names read right to left: InverseReverse is "reverse, then
/// take the inverse".
enum class Symmetry {
  Identity,
  Reverse,
  Complement,
  ReverseComplement,
  Inverse,
  InverseReverse,
  InverseComplement,
  InverseReverseComplement,
};

inline constexpr Symmetry kAllSymmetries[] = {
    Symmetry::Identity,          Symmetry::Reverse,
    Symmetry::Complement,        Symmetry::ReverseComplement,
    Symmetry::Inverse,           Symmetry::InverseReverse,
    Symmetry::InverseComplement, Symmetry::InverseReverseComplement,
};

const char* symmetry_name(Symmetry s);
Symmetry inverse_symmetry(Symmetry s);

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation apply_symmetry(Symmetry s, const Permutation& p);

/// The unique permutation order-isomorphic to a sequence of distinct keys.
/// Throws std::invalid_argument on duplicate keys.
template <typename Key>
Permutation pattern_of(const std::vector<Key>& source);

/// True iff host has a subsequence order-isomorphic to pattern.
bool involves(const Permutation& pattern, const Permutation& host);

/// Involvement restricted to occurrences that use host position
/// `host_pos` (0-based) in the role of pattern position `pat_pos`.
bool involves_at(const Permutation& pattern, const Permutation& host,
                 int pat_pos, int host_pos);

bool is_increasing(const Permutation& p);
bool is_decreasing(const Permutation& p);

/// Length of the longest decreasing subsequence.
int longest_decreasing(const Permutation& p);
int longest_increasing(const Permutation& p);

/// True iff no index i has values[i] == values[i+1] + 1.
bool is_irreducible(const Permutation& p);

/// Collapse adjacent positions holding values v+1, v to a single point,
/// flattening and repeating until irreducible.  The fixpoint is unique;
/// this runs left-to-right passes until none apply.
Permutation contract(const Permutation& p);

/// Number of ways to expand one irreducible of length m into decreasing
/// consecutive runs totalling n points: C(n-1, m-1).
/// Throws std::invalid_argument if m > n, or m == 0 with n > 0.
std::uint64_t expansion_count(int m, int n);

/// All permutations of length n in shortlex order (test/desk scale).
std::vector<Permutation> all_permutations(int n);

// --- implementation of the template ---

template <typename Key>
Permutation pattern_of(const std::vector<Key>& source) {
  const int n = static_cast<int>(source.size());
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return source[static_cast<size_t>(a)] < source[static_cast<size_t>(b)];
  });
  std::vector<int> vals(static_cast<size_t>(n));
  for (int rank = 0; rank < n; ++rank) {
    if (rank > 0 && !(source[static_cast<size_t>(idx[static_cast<size_t>(
                          rank - 1)])] <
                      source[static_cast<size_t>(idx[static_cast<size_t>(
                          rank)])])) {
      throw std::invalid_argument("pattern_of: duplicate keys");
    }
    vals[static_cast<size_t>(idx[static_cast<size_t>(rank)])] = rank + 1;
  }
  return Permutation(std::move(vals));
}

}  // namespace permpoly
