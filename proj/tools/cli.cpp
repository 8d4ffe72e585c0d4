#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "permpoly/classify.hpp"
#include "permpoly/degree.hpp"
#include "permpoly/enumerate.hpp"
#include "permpoly/genfunc.hpp"
#include "permpoly/verify.hpp"
#include "permpoly/wclass.hpp"

namespace permpoly {

namespace {

using Json = nlohmann::ordered_json;

Json case_to_json(const CaseLabel& label) {
  Json j;
  j["theorem"] = label.theorem;
  j["path"] = label.case_path;
  return j;
}

Json case_details(const CaseLabel& label) {
  Json j = case_to_json(label);
  j["symmetry"] = symmetry_name(label.witness_symmetry);
  Json roles = Json::array();
  for (const auto& p : label.assignment) roles.push_back(p.to_string());
  j["roles"] = roles;
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

struct Options {
  bool json = false;
  std::uint64_t max_nodes = kDefaultNodeBudget;
};

int cmd_classify(const Options& opt, const std::string& basis_text,
                 bool all_matches, std::ostream& out) {
  Basis basis = Basis::parse(basis_text);
  GrowthVerdict verdict = classify(basis);

  std::optional<CaseLabel> label;
  std::vector<CaseLabel> matches;
  bool matchable = basis.size() == 2 || basis.size() == 3;
  for (const auto& m : basis.members()) matchable = matchable && m.size() >= 3;
  if (matchable) {
    label = basis.size() == 2 ? match_two_basis(basis) : match_three_basis(basis);
    if (all_matches)
      matches = basis.size() == 2 ? match_two_basis_all(basis)
                                  : match_three_basis_all(basis);
  }

  if (opt.json) {
    Json j;
    j["polynomial"] = verdict.polynomial;
    Json unc = Json::array();
    for (TenClass c : verdict.uncovered) unc.push_back(ten_class_name(c));
    j["uncovered"] = unc;
    j["case"] = label ? case_to_json(*label) : Json(nullptr);
    if (all_matches) {
      Json all = Json::array();
      for (const auto& m : matches) all.push_back(case_details(m));
      j["matches"] = all;
    }
    out << j.dump() << "\n";
  } else {
    out << "basis: " << basis.to_string() << "\n";
    out << "polynomial: " << (verdict.polynomial ? "yes" : "no") << "\n";
    out << "uncovered:";
    for (TenClass c : verdict.uncovered) out << ' ' << ten_class_name(c);
    out << "\n";
    if (label) {
      out << "case: theorem " << label->theorem << " case " << label->case_path
          << " (symmetry " << symmetry_name(label->witness_symmetry)
          << ", roles";
      for (const auto& p : label->assignment) out << ' ' << p.to_string();
      out << ")\n";
    } else {
      out << "case: none\n";
    }
    if (all_matches) {
      out << "matches: " << matches.size() << "\n";
      for (const auto& m : matches) {
        out << "  theorem " << m.theorem << " case " << m.case_path
            << " (symmetry " << symmetry_name(m.witness_symmetry) << ", roles";
        for (const auto& p : m.assignment) out << ' ' << p.to_string();
        out << ")\n";
      }
    }
  }
  return 0;
}

int cmd_count(const Options& opt, const std::string& basis_text, int max_n,
              std::ostream& out) {
  Basis basis = Basis::parse(basis_text);
  Budget budget(opt.max_nodes);
  CountSequence seq = count_avoiders(basis, max_n, &budget);
  if (opt.json) {
    Json j;
    Json members = Json::array();
    for (const auto& m : basis.members()) members.push_back(m.to_string());
    j["basis"] = members;
    Json counts = Json::array();
    for (const auto& c : seq.counts) counts.push_back(c.str());
    j["counts"] = counts;
    out << j.dump() << "\n";
  } else {
    for (int n = 0; n <= seq.max_n(); ++n)
      out << n << '\t' << seq.at(n).str() << "\n";
  }
  return 0;
}

int cmd_fit(const Options& opt, const std::string& basis_text, int max_n,
            std::ostream& out) {
  Basis basis = Basis::parse(basis_text);
  Budget budget(opt.max_nodes);
  CountSequence seq = count_avoiders(basis, max_n, &budget);
  auto fit = fit_eventual_polynomial(seq);
  if (opt.json) {
    Json j;
    if (fit) {
      j["degree"] = fit->degree;
      Json coeffs = Json::array();
      for (int i = 0; i <= fit->poly.degree(); ++i)
        coeffs.push_back(rational_to_string(fit->poly.coeff(i)));
      j["coefficients"] = coeffs;
      j["threshold"] = fit->threshold;
    } else {
      j["insufficient_data"] = true;
    }
    out << j.dump() << "\n";
  } else {
    if (fit) {
      out << "degree: " << fit->degree << "\n";
      out << "coefficients:";
      for (int i = 0; i <= fit->poly.degree(); ++i)
        out << ' ' << rational_to_string(fit->poly.coeff(i));
      out << "\n";
      out << "threshold: " << fit->threshold << "\n";
    } else {
      out << "insufficient data\n";
    }
  }
  return 0;
}

int cmd_degree(const Options& opt, int r, int p, int q, std::ostream& out) {
  Budget budget(opt.max_nodes);
  DegreeReport report = degree_of(r, BetaShape{p, q}, &budget);
  Json positions = Json::array();
  for (int pos : report.witness.positions) positions.push_back(pos + 1);
  if (opt.json) {
    Json j;
    j["exact_degree"] =
        report.exact_degree ? Json(*report.exact_degree) : Json(nullptr);
    j["lower"] = report.lower_bound;
    j["upper"] = report.upper_bound;
    j["witness_host"] = report.witness.host.to_string();
    j["witness_positions"] = positions;
    j["irreducible_count"] = report.irreducible_count;
    j["max_irreducible_length"] = report.max_irreducible_length;
    j["budget_exceeded"] = report.budget_exceeded;
    out << j.dump() << "\n";
  } else {
    out << "exact degree: ";
    if (report.exact_degree)
      out << *report.exact_degree << "\n";
    else
      out << "unknown (budget exceeded)\n";
    out << "bounds: [" << report.lower_bound << ", " << report.upper_bound
        << "]\n";
    out << "witness host: " << report.witness.host.to_string() << "\n";
    out << "witness positions (1-based):";
    for (int pos : report.witness.positions) out << ' ' << pos + 1;
    out << "\n";
    out << "irreducibles: " << report.irreducible_count
        << " (max length " << report.max_irreducible_length << ")\n";
  }
  return 0;
}

int cmd_genfunc(const Options& opt, int r, int order, std::ostream& out) {
  RationalPolynomial g = g_poly(r);
  PowerSeries f = f_series(r, order);
  bool degree_ok = true, leading_ok = true;
  if (r >= 2) {
    degree_ok = g.degree() == 2 * r - 3;
    leading_ok = g.leading() == Rational(catalan(r - 2));
  }
  if (opt.json) {
    Json j;
    Json gc = Json::array();
    for (int i = 0; i <= g.degree(); ++i)
      gc.push_back(rational_to_string(g.coeff(i)));
    j["G"] = gc;
    Json fc = Json::array();
    for (int n = 0; n <= f.order(); ++n)
      fc.push_back(rational_to_string(f.coeff(n)));
    j["F"] = fc;
    j["laws"] = Json{{"degree_ok", degree_ok}, {"leading_ok", leading_ok}};
    out << j.dump() << "\n";
  } else {
    out << "G:";
    for (int i = 0; i <= g.degree(); ++i)
      out << ' ' << rational_to_string(g.coeff(i));
    out << "\n";
    out << "F:";
    for (int n = 0; n <= f.order(); ++n)
      out << ' ' << rational_to_string(f.coeff(n));
    out << "\n";
    out << "laws: degree " << (degree_ok ? "ok" : "FAIL") << ", leading "
        << (leading_ok ? "ok" : "FAIL") << "\n";
  }
  return 0;
}

int cmd_irreducibles(const Options& opt, int r, int p, int q,
                     std::ostream& out) {
  Budget budget(opt.max_nodes);
  std::vector<Permutation> irr = irreducibles_of(r, BetaShape{p, q}, &budget);
  int max_len = 0;
  for (const auto& m : irr) max_len = std::max(max_len, m.size());
  if (opt.json) {
    Json j;
    Json list = Json::array();
    for (const auto& m : irr) list.push_back(m.to_string());
    j["irreducibles"] = list;
    j["count"] = irr.size();
    j["max_length"] = max_len;
    out << j.dump() << "\n";
  } else {
    for (const auto& m : irr)
      out << (m.empty() ? std::string("(empty)") : m.to_string()) << "\n";
    out << "count: " << irr.size() << ", max length: " << max_len << "\n";
  }
  return 0;
}

int cmd_inflate(const Options& opt, const std::string& skeleton_text,
                const std::string& signs_text, const std::string& lengths_text,
                int count_n, std::ostream& out) {
  PeggedPattern peg(Permutation::parse(skeleton_text),
                    SignSequence::parse(signs_text));
  if (!lengths_text.empty()) {
    Permutation result = inflate(peg, parse_int_list(lengths_text));
    if (opt.json) {
      Json j;
      j["permutation"] = result.to_string();
      out << j.dump() << "\n";
    } else {
      out << (result.empty() ? std::string("(empty)") : result.to_string())
          << "\n";
    }
    return 0;
  }
  std::uint64_t count = peg_class_count(peg, count_n);
  if (opt.json) {
    Json j;
    j["n"] = count_n;
    j["count"] = count;
    out << j.dump() << "\n";
  } else {
    out << "count: " << count << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, const std::string& suite,
               std::ostream& out) {
  SuiteReport report;
  if (suite == "genfunc")
    report = verify_genfunc();
  else if (suite == "bounds")
    report = verify_bounds();
  else if (suite == "agreement")
    report = verify_agreement();
  else
    throw CLI::ValidationError("unknown suite: " + suite);

  if (opt.json) {
    Json j;
    j["suite"] = suite;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json cj;
      cj["name"] = c.name;
      cj["passed"] = c.passed;
      cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    j["all_passed"] = report.all_passed();
    out << j.dump() << "\n";
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed ? "[ ok ] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << " — " << c.detail;
      out << "\n";
    }
    out << (report.all_passed() ? "all checks passed" : "checks FAILED")
        << "\n";
  }
  if (report.budget_exceeded) return 3;
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"pattern-class growth toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_option("--max-nodes", opt.max_nodes,
                 "budget on candidate extensions")
      ->capture_default_str();
  bool seed_free = false;
  app.add_flag("--seed-free", seed_free,
               "accepted for pipeline compatibility; every operation is "
               "deterministic");

  std::string basis_text, skeleton_text, signs_text, lengths_text, suite;
  int max_n = 14, r = 3, p = 0, q = 1, order = 12, count_n = -1;

  auto* c_classify = app.add_subcommand("classify",
                                        "polynomial-growth verdict for a basis");
  c_classify->add_option("--basis", basis_text, "space-separated permutations")
      ->required();
  bool all_matches = false;
  c_classify->add_flag("--all-matches", all_matches,
                       "list every structural match");

  auto* c_count = app.add_subcommand("count", "count avoiders by length");
  c_count->add_option("--basis", basis_text)->required();
  c_count->add_option("--max-n", max_n)->capture_default_str();

  auto* c_fit = app.add_subcommand("fit", "fit the eventual counting polynomial");
  c_fit->add_option("--basis", basis_text)->required();
  c_fit->add_option("--max-n", max_n)->capture_default_str();

  auto* c_degree = app.add_subcommand(
      "degree", "exact degree and bounds for Av(12...r, beta_pq)");
  c_degree->add_option("--r", r)->required()->check(CLI::Range(2, 1000));
  c_degree->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
  c_degree->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);

  auto* c_genfunc = app.add_subcommand(
      "genfunc", "generating-function polynomials and series");
  c_genfunc->add_option("--r", r)->required()->check(CLI::Range(1, 1000));
  c_genfunc->add_option("--order", order)->capture_default_str();

  auto* c_irr = app.add_subcommand("irreducibles",
                                   "irreducible members of Av(12...r, beta_pq)");
  c_irr->add_option("--r", r)->required()->check(CLI::Range(2, 1000));
  c_irr->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
  c_irr->add_option("--q", q)->required()->check(CLI::NonNegativeNumber);

  auto* c_inflate = app.add_subcommand("inflate",
                                       "inflate a signed skeleton");
  c_inflate->add_option("--skeleton", skeleton_text)->required();
  c_inflate->add_option("--signs", signs_text)->required();
  c_inflate->add_option("--lengths", lengths_text,
                        "comma-separated run lengths");
  c_inflate->add_option("--count-n", count_n,
                        "count distinct inflations of this total length");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("suite", suite, "bounds | genfunc | agreement")
      ->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*c_classify) return cmd_classify(opt, basis_text, all_matches, out);
    if (*c_count) return cmd_count(opt, basis_text, max_n, out);
    if (*c_fit) return cmd_fit(opt, basis_text, max_n, out);
    if (*c_degree) return cmd_degree(opt, r, p, q, out);
    if (*c_genfunc) return cmd_genfunc(opt, r, order, out);
    if (*c_irr) return cmd_irreducibles(opt, r, p, q, out);
    if (*c_inflate) {
      if (lengths_text.empty() && count_n < 0) {
        err << "usage error: inflate needs --lengths or --count-n\n";
        return 1;
      }
      return cmd_inflate(opt, skeleton_text, signs_text, lengths_text,
                         count_n, out);
    }
    if (*c_verify) return cmd_verify(opt, suite, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 1;
}

}  // namespace permpoly
