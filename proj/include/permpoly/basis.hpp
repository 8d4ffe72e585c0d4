#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "permpoly/perm.hpp"

namespace permpoly {

/// A nonempty set of forbidden permutations, stored deduplicated and in
/// shortlex order so that identical sets compare equal.
class Basis {
public:
  explicit Basis(std::vector<Permutation> members);

  /// Parse space-separated permutation tokens ("132 321").
  static Basis parse(const std::string& text);

  const std::vector<Permutation>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  std::string to_string() const;

  bool operator==(const Basis&) const = default;
  auto operator<=>(const Basis&) const = default;

private:
  std::vector<Permutation> members_;
};

/// True iff host avoids every member of the basis.
bool avoids_basis(const Permutation& host, const Basis& basis);

Basis apply_symmetry(Symmetry s, const Basis& basis);

/// The shortlex-least image of the basis under the eight symmetries.
Basis canonical_basis(const Basis& basis);

/// Budget on candidate-permutation work; guards against accidentally
/// exponential bases.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

class Budget {
public:
  explicit Budget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded("node budget exceeded");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace permpoly
