#include "permpoly/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "permpoly/classify.hpp"
#include "permpoly/degree.hpp"
#include "permpoly/enumerate.hpp"
#include "permpoly/genfunc.hpp"

namespace permpoly {

std::vector<Basis> sweep_bases(int k, const std::vector<int>& lengths) {
  std::vector<Permutation> pool;
  for (int len : lengths)
    for (const auto& p : all_permutations(len)) pool.push_back(p);
  const int m = static_cast<int>(pool.size());
  std::set<Basis> canon;
  std::vector<int> idx(static_cast<size_t>(k));
  // k-subsets of the pool
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      std::vector<Permutation> members;
      for (int i : idx) members.push_back(pool[static_cast<size_t>(i)]);
      canon.insert(canonical_basis(Basis(std::move(members))));
      return;
    }
    for (int i = start; i < m; ++i) {
      idx[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return {canon.begin(), canon.end()};
}

AgreementReport run_agreement_sweep() {
  AgreementReport report;
  auto run = [&](const std::vector<Basis>& bases, int k) {
    for (const auto& b : bases) {
      const bool poly = classify(b).polynomial;
      const bool matched = k == 2 ? match_two_basis(b).has_value()
                                  : match_three_basis(b).has_value();
      ++report.bases;
      if (poly != matched) {
        ++report.disagreements;
        std::ostringstream os;
        os << "basis {" << b.to_string() << "}: verdict "
           << (poly ? "polynomial" : "non-polynomial") << " but matcher "
           << (matched ? "labelled it" : "found no case");
        report.failures.push_back(os.str());
      }
    }
  };
  run(sweep_bases(2, {3, 4}), 2);
  run(sweep_bases(3, {3, 4}), 3);
  return report;
}

ProbeReport run_probe_sweep(std::uint64_t per_basis_budget) {
  ProbeReport report;
  auto run = [&](const std::vector<Basis>& bases) {
    for (const auto& b : bases) {
      ++report.bases;
      const bool poly = classify(b).polynomial;
      if (poly) {
        Budget budget(per_basis_budget);
        CappedCounts cc = count_avoiders_capped(b, 14, &budget);
        if (cc.budget_exceeded) {
          ++report.budget_capped;
          continue;
        }
        auto fit = fit_eventual_polynomial(cc.counts);
        if (!fit || fit->threshold > 10) {
          std::ostringstream os;
          os << "basis {" << b.to_string() << "}: polynomial verdict but ";
          if (!fit)
            os << "no polynomial fit by N = 14";
          else
            os << "fit threshold " << fit->threshold << " > 10";
          report.failures.push_back(os.str());
        }
      } else {
        Budget budget(per_basis_budget);
        CappedCounts cc = count_avoiders_capped(b, 12, &budget);
        if (cc.budget_exceeded) {
          ++report.budget_capped;
          continue;
        }
        for (int n = 5; n <= 12; ++n) {
          if (cc.counts.at(n) < fibonacci(n - 1)) {
            std::ostringstream os;
            os << "basis {" << b.to_string() << "}: non-polynomial verdict "
               << "but c_" << n << " = " << cc.counts.at(n) << " < F("
               << n - 1 << ") = " << fibonacci(n - 1);
            report.failures.push_back(os.str());
            break;
          }
        }
      }
    }
  };
  run(sweep_bases(2, {3, 4}));
  run(sweep_bases(3, {3, 4}));
  return report;
}

namespace {

void add_check(SuiteReport& r, const std::string& name, bool passed,
               const std::string& detail = "") {
  r.checks.push_back(CheckResult{name, passed, detail});
}

}  // namespace

SuiteReport verify_genfunc() {
  SuiteReport report;
  GLawReport laws = check_g_laws(8);
  for (const auto& c : laws.checks) {
    std::ostringstream os;
    os << "degree " << c.degree << ", leading " << rational_to_string(c.leading);
    add_check(report, "G law r=" + std::to_string(c.r),
              c.degree_ok && c.leading_ok, os.str());
  }
  for (int r = 1; r <= 5; ++r)
    add_check(report, "series recurrence r=" + std::to_string(r),
              mv_consistency(r, 12));
  for (int r = 2; r <= 5; ++r) {
    // substituting x/(1-x) and then y/(1+y) must return the polynomial
    PowerSeries f = f_series(r, 12);
    std::vector<Rational> alt(13, Rational(0));
    for (int i = 1; i <= 12; ++i)
      alt[static_cast<size_t>(i)] = (i % 2 == 1) ? Rational(1) : Rational(-1);
    PowerSeries back = compose(f, PowerSeries(12, std::move(alt)));
    add_check(report, "substitution round-trip r=" + std::to_string(r),
              back == PowerSeries::from_polynomial(g_poly(r), 12));
  }
  for (int r = 3; r <= 4; ++r) {
    PowerSeries f = f_series(r, 10);
    Basis basis({Permutation::identity(r),
                 Permutation(std::vector<int>{2, 3, 1})});
    CountSequence seq = count_avoiders(basis, 10);
    bool ok = true;
    for (int n = 0; n <= 10 && ok; ++n)
      ok = Rational(seq.at(n)) == f.coeff(n);
    add_check(report, "series equals enumeration r=" + std::to_string(r), ok);
  }
  return report;
}

SuiteReport verify_bounds() {
  SuiteReport report;
  struct Config {
    int r, p, q;
  };
  const Config grid[] = {{2, 0, 1}, {2, 1, 0}, {3, 0, 1}, {3, 1, 0},
                         {3, 1, 1}, {3, 0, 2}, {3, 2, 0}, {4, 0, 1},
                         {4, 1, 0}};
  for (const auto& cfg : grid) {
    BetaShape shape{cfg.p, cfg.q};
    std::ostringstream name;
    name << "sandwich r=" << cfg.r << " p=" << cfg.p << " q=" << cfg.q;
    try {
      Budget budget;
      DegreeReport d = degree_of(cfg.r, shape, &budget);
      if (!d.exact_degree) {
        add_check(report, name.str(), false, "budget exhausted");
        report.budget_exceeded = report.budget_exceeded || d.budget_exceeded;
        continue;
      }
      const bool ok = d.lower_bound <= *d.exact_degree &&
                      *d.exact_degree <= d.upper_bound;
      std::ostringstream os;
      os << d.lower_bound << " <= " << *d.exact_degree
         << " <= " << d.upper_bound;
      add_check(report, name.str(), ok, os.str());
    } catch (const BudgetExceeded&) {
      report.budget_exceeded = true;
      add_check(report, name.str(), false, "budget exhausted");
    }
  }
  for (int r : {3, 4}) {
    for (const auto& shape : {BetaShape{0, 1}, BetaShape{1, 1}}) {
      std::ostringstream name;
      name << "witness r=" << r << " p=" << shape.p << " q=" << shape.q;
      try {
        ExpansibleSet w = lemma_witness(r, shape);
        const bool ok =
            w.host.size() == (r - 1) * (2 * shape.s() - 5) &&
            static_cast<int>(w.positions.size()) == (r - 1) * (shape.s() - 2);
        add_check(report, name.str(), ok, w.host.to_string());
      } catch (const std::exception& e) {
        add_check(report, name.str(), false, e.what());
      }
    }
  }
  return report;
}

SuiteReport verify_agreement() {
  SuiteReport report;
  AgreementReport sweep = run_agreement_sweep();
  {
    std::ostringstream os;
    os << sweep.bases << " bases, " << sweep.disagreements
       << " disagreements";
    add_check(report, "matcher agreement sweep", sweep.disagreements == 0,
              os.str());
  }
  ProbeReport probe = run_probe_sweep(2'000'000);
  {
    std::ostringstream os;
    os << probe.bases << " bases, " << probe.budget_capped
       << " budget-capped, " << probe.failures.size() << " failures";
    add_check(report, "empirical dichotomy probe", probe.failures.empty(),
              os.str());
  }
  return report;
}

}  // namespace permpoly
