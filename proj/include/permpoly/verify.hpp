#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permpoly/basis.hpp"

namespace permpoly {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool budget_exceeded = false;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Canonical representatives (under the eight symmetries) of all k-element
/// subsets of the permutations of the given lengths.
std::vector<Basis> sweep_bases(int k, const std::vector<int>& lengths);

struct AgreementReport {
  int bases = 0;
  int disagreements = 0;
  std::vector<std::string> failures;
};

/// Polynomial-growth verdict versus structural matcher over every
/// canonical two-element basis (members of length 3-4) and three-element
/// basis (members from lengths 3-4).
AgreementReport run_agreement_sweep();

struct ProbeReport {
  int bases = 0;
  int budget_capped = 0;
  std::vector<std::string> failures;
};

/// Counting-based dichotomy check over the same sweep: polynomial verdicts
/// must fit a polynomial by N = 14 with threshold <= 10; non-polynomial
/// verdicts must dominate Fibonacci on 5 <= n <= 12.  Bases whose counts
/// exceed the per-basis budget are reported, not failed.
ProbeReport run_probe_sweep(std::uint64_t per_basis_budget);

/// Degree/leading-coefficient laws of the G polynomials, identity checks
/// of the series recurrences, and series-versus-enumeration agreement.
SuiteReport verify_genfunc();

/// Degree bound sandwich over a small (r, p, q) grid plus witness checks.
SuiteReport verify_bounds();

/// Agreement sweep plus a probe pass at desk scale.
SuiteReport verify_agreement();

}  // namespace permpoly
