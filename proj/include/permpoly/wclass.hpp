#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/perm.hpp"

namespace permpoly {

/// A nonempty sequence over {+1, -1}; text form "+-+".
class SignSequence {
public:
  explicit SignSequence(std::vector<int> signs);
  static SignSequence parse(const std::string& text);

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int i) const { return signs_[static_cast<size_t>(i)]; }
  const std::vector<int>& signs() const { return signs_; }
  std::string to_string() const;

  bool operator==(const SignSequence&) const = default;

private:
  std::vector<int> signs_;
};

/// True iff p splits into |eps| consecutive position blocks (empty blocks
/// allowed) where block i is increasing when eps[i] = +1 and decreasing
/// when eps[i] = -1.
bool in_w_class(const Permutation& p, const SignSequence& eps);

/// If p is an increasing sequence of layers, each a singleton or a
/// decreasing doubleton, returns the layer sizes; otherwise nullopt.
std::optional<std::vector<int>> layer_decomposition(const Permutation& p);

bool in_l2(const Permutation& p);
bool in_l2r(const Permutation& p);

/// The ten obstruction classes whose simultaneous coverage by a basis
/// characterises polynomial growth.
enum class TenClass {
  WPlusPlus,
  WPlusMinus,
  WMinusPlus,
  WMinusMinus,
  WPlusPlusInv,
  WPlusMinusInv,
  WMinusPlusInv,
  WMinusMinusInv,
  L2,
  L2Rev,
};

inline constexpr TenClass kTenClasses[] = {
    TenClass::WPlusPlus,    TenClass::WPlusMinus,    TenClass::WMinusPlus,
    TenClass::WMinusMinus,  TenClass::WPlusPlusInv,  TenClass::WPlusMinusInv,
    TenClass::WMinusPlusInv, TenClass::WMinusMinusInv, TenClass::L2,
    TenClass::L2Rev,
};

const char* ten_class_name(TenClass c);
std::optional<TenClass> ten_class_from_name(const std::string& name);

bool in_ten_class(const Permutation& p, TenClass c);

/// All permutations of length 1..max_n lying in both layered classes;
/// equals {1, 12, 21} for every max_n >= 2.
std::vector<Permutation> l2_intersection_check(int max_n);

/// A permutation skeleton with one sign per point.  Inflating a +1 point
/// yields an increasing consecutive run, a -1 point a decreasing one.
/// Construction rejects skeletons that are not in reduced form (an
/// adjacent ascent i, i+1 with both signs +1, or an adjacent descent
/// i+1, i with both signs -1, would collapse to a smaller skeleton).
class PeggedPattern {
public:
  PeggedPattern(Permutation skeleton, SignSequence signs);

  const Permutation& skeleton() const { return skeleton_; }
  const SignSequence& signs() const { return signs_; }

private:
  Permutation skeleton_;
  SignSequence signs_;
};

/// Replace each skeleton point by a monotone consecutive run of the given
/// length (0 allowed); runs occupy contiguous value intervals ordered as
/// the skeleton dictates.
Permutation inflate(const PeggedPattern& peg, const std::vector<int>& lengths);

/// Number of distinct permutations of length n arising as inflations.
std::uint64_t peg_class_count(const PeggedPattern& peg, int n);

}  // namespace permpoly
