#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it in-process with string streams.

#include "octoclif/examples.hpp"
#include "octoclif/expr.hpp"
#include "octoclif/laws.hpp"
#include "octoclif/report.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace octoclif {

namespace cli {

enum Exit { ok = 0, eval_error = 1, usage_error = 2, claim_deviation = 3 };

inline void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << "error: " << kind << ": " << message << "\n";
}

inline std::string cell(const std::string& s, int width = 5) {
  return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, ' ') + s;
}

/// The unit table in the layout of the printed one: header row 1, e1..e7.
inline std::string render_circ_table() {
  std::ostringstream os;
  os << cell("1");
  for (int b = 1; b <= 7; ++b) os << cell("e" + std::to_string(b));
  os << "\n";
  for (int a = 1; a <= 7; ++a) {
    os << cell("e" + std::to_string(a));
    for (int b = 1; b <= 7; ++b) os << cell(to_compact(circ(Octonion::unit(a), Octonion::unit(b))));
    os << "\n";
  }
  return os.str();
}

/// x as ±E_c or ±1, if it is one.
inline std::string as_e_unit(const Octonion& x, const std::array<Octonion, 7>& e) {
  if (x == Octonion::scalar(1)) return "1";
  if (x == Octonion::scalar(-1)) return "-1";
  for (int c = 0; c < 7; ++c) {
    if (x == e[c]) return "E" + std::to_string(c + 1);
    if (x == -e[c]) return "-E" + std::to_string(c + 1);
  }
  return "?";
}

inline std::string render_verdict(const LawVerdict& v, std::size_t max_witnesses) {
  std::ostringstream os;
  os << v.law << " [" << v.scope << "]: " << to_string(v.status) << " (claim " << v.claim
     << (v.matches_claim ? ", agrees" : ", DEVIATES") << "), " << v.case_count << " cases\n";
  for (const auto& g : v.sign_pattern)
    os << "  " << g.key << ": " << g.pattern() << "  (+" << g.plus << " -" << g.minus << " other " << g.other
       << ")\n";
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  if (!v.witnesses.empty()) {
    os << "  witnesses: " << v.witnesses.size();
    if (v.witnesses.size() > max_witnesses) os << " (first " << max_witnesses << " shown, --json lists all)";
    os << "\n";
    for (std::size_t i = 0; i < v.witnesses.size() && i < max_witnesses; ++i) {
      const auto& w = v.witnesses[i];
      os << "    " << w.inputs << ": " << w.lhs << " vs " << w.rhs << "\n";
    }
  }
  return os.str();
}

inline std::string blade_list(const std::vector<BladeIndex>& blades) {
  std::string out;
  for (auto b : blades) out += (out.empty() ? "" : " ") + b.name();
  return out.empty() ? "(none)" : out;
}

struct Options {
  std::string fold_left = "asc", fold_right = "asc", odot = "left";

  Conventions conventions(E7Rule e7 = E7Rule::corrected) const {
    Conventions c;
    c.fold.left_order = fold_left == "desc" ? FoldOrder::descending : FoldOrder::ascending;
    c.fold.right_order = fold_right == "desc" ? FoldOrder::descending : FoldOrder::ascending;
    c.odot = odot == "right" ? OdotVariant::right : OdotVariant::left;
    c.e7 = e7;
    return c;
  }
};

}  // namespace cli

/// Runs the CLI with `args` (without the program name); returns the exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  CLI::App app{"Exact Cl(0,7) and octonion product calculator and identity checker", "octoclif"};
  app.set_version_flag("--version", std::string(OCTOCLIF_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--fold-left", opt.fold_left, "Factor order for right-acting blades")
      ->check(CLI::IsMember({"asc", "desc"}));
  app.add_option("--fold-right", opt.fold_right, "Factor order for left-acting blades")
      ->check(CLI::IsMember({"asc", "desc"}));
  app.add_option("--odot", opt.odot, "Clifford-Clifford product used by twisted products")
      ->check(CLI::IsMember({"left", "right"}));

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  std::string expr_text;
  bool eval_json = false;
  eval->add_option("expr", expr_text, "Expression")->required();
  eval->add_flag("--json", eval_json, "Print the JSON form");

  // table
  auto* table = app.add_subcommand("table", "Multiplication tables");
  table->require_subcommand(1);
  auto* table_circ = table->add_subcommand("circ", "Unit table of the octonion product");
  auto* table_eunits = table->add_subcommand("eunits", "(1,u) table of the units E1..E7");
  std::string eunits_u = "1", e7_rule = "corrected";
  table_eunits->add_option("--u", eunits_u, "Parameter u (expression)");
  table_eunits->add_option("--e7", e7_rule, "Definition of E7")->check(CLI::IsMember({"printed", "corrected"}));

  // laws
  auto* laws = app.add_subcommand("laws", "Verdicts for the lemmas");
  std::string lemma = "all", scope_text = "exhaustive";
  std::uint64_t laws_seed = 1;
  int laws_samples = 16;
  bool laws_json = false, expect_paper = false;
  std::size_t max_witnesses = 5;
  laws->add_option("--lemma", lemma, "Lemma number 1..6 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "all"}));
  laws->add_option("--scope", scope_text, "exhaustive, grade0..grade7 or sampled");
  laws->add_option("--seed", laws_seed, "Seed for sampled scopes");
  laws->add_option("--samples", laws_samples, "Sample count for sampled scopes")->check(CLI::PositiveNumber);
  laws->add_option("--witnesses", max_witnesses, "Witnesses shown per verdict in text output");
  laws->add_flag("--json", laws_json, "Print a JSON report");
  laws->add_flag("--expect-paper", expect_paper, "Exit 3 when a verdict deviates from the stated claim");

  // examples
  auto* examples = app.add_subcommand("examples", "Transcripts of the worked examples");
  int example_n = 0;
  bool examples_json = false;
  examples->add_option("--n", example_n, "Example number 1..5 (default all)")->check(CLI::Range(1, 5));
  examples->add_flag("--json", examples_json, "Print the verdict ledger as JSON");

  // moufang
  auto* moufang = app.add_subcommand("moufang", "Moufang identities for a product");
  std::string product = "circ", form = "standard";
  int identity = 1, trials = 500;
  std::uint64_t moufang_seed = 1;
  std::vector<std::string> moufang_u;
  bool moufang_json = false;
  moufang->add_option("--product", product, "circ, circ1u, odotL, odotR or bullet")
      ->check(CLI::IsMember({"circ", "circ1u", "circ1U", "odotL", "odotR", "bullet"}));
  moufang->add_option("--identity", identity, "Identity 1..4")->check(CLI::Range(1, 4));
  moufang->add_option("--trials", trials, "Random trials")->check(CLI::PositiveNumber);
  moufang->add_option("--seed", moufang_seed, "Seed");
  moufang->add_option("--form", form, "Reading of identity 3")->check(CLI::IsMember({"standard", "printed"}));
  moufang->add_option("--u", moufang_u, "Parameter(s) for circ1u (default: 1 and 10 sampled)");
  moufang->add_option("--witnesses", max_witnesses, "Witnesses shown in text output");
  moufang->add_flag("--json", moufang_json, "Print a JSON report");

  // sigma-scan
  auto* sigma = app.add_subcommand("sigma-scan", "Sign of A∘u B against A∘B for every basis blade");
  bool sigma_json = false;
  sigma->add_flag("--json", sigma_json, "Print a JSON report");

  // thm1
  auto* thm1 = app.add_subcommand("thm1", "Sampled check of the twisted-parameter identity");
  int thm1_samples = 1000;
  std::uint64_t thm1_seed = 1;
  bool thm1_json = false;
  thm1->add_option("--samples", thm1_samples, "Number of cases")->check(CLI::PositiveNumber);
  thm1->add_option("--seed", thm1_seed, "Seed");
  thm1->add_option("--witnesses", max_witnesses, "Witnesses shown in text output");
  thm1->add_flag("--json", thm1_json, "Print every case as JSON");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion& e) {
    out << OCTOCLIF_VERSION << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    print_error(err, "Usage", e.what());
    return usage_error;
  }

  const Conventions conv = opt.conventions(e7_rule == "printed" ? E7Rule::as_printed : E7Rule::corrected);

  auto eval_or_report = [&](const std::string& text, Multivector& value) {
    try {
      value = evaluate(text, conv);
      return true;
    } catch (const ExprError& e) {
      err << "error: " << e.diagnostic() << "\n";
      return false;
    }
  };

  try {
    if (eval->parsed()) {
      Multivector v;
      if (!eval_or_report(expr_text, v)) return eval_error;
      out << (eval_json ? to_json(v).dump() : to_text(v)) << "\n";
      return ok;
    }

    if (table_circ->parsed()) {
      out << render_circ_table();
      return ok;
    }

    if (table_eunits->parsed()) {
      Multivector u;
      if (!eval_or_report(eunits_u, u)) return eval_error;
      const Parameter p(u);
      const EUnits units = e_units_unchecked(u, conv.e7, conv.fold);
      out << "u = " << to_text(u) << ", E7 " << to_string(conv.e7) << "\n";
      for (int a = 0; a < 7; ++a) out << "  E" << a + 1 << " = " << to_compact(units.e[a]) << "\n";
      if (!units.degeneracy.empty()) out << "  degenerate: " << units.degeneracy << "\n";
      out << cell("1");
      for (int b = 1; b <= 7; ++b) out << cell("E" + std::to_string(b));
      out << "\n";
      for (int a = 1; a <= 7; ++a) {
        out << cell("E" + std::to_string(a));
        for (int b = 1; b <= 7; ++b)
          out << cell(as_e_unit(circ_1u(p, units.e[a - 1].to_multivector(), units.e[b - 1].to_multivector(), conv),
                                units.e));
        out << "\n";
      }
      out << render_verdict(verify_table_eunits(u, conv), max_witnesses);
      return ok;
    }

    if (laws->parsed()) {
      Scope scope;
      try {
        scope = parse_scope(scope_text);
      } catch (const std::invalid_argument& e) {
        print_error(err, "Usage", e.what());
        return usage_error;
      }
      scope.seed = laws_seed;
      scope.samples = laws_samples;
      std::vector<LawVerdict> verdicts;
      if (lemma == "all")
        for (int n = 1; n <= 6; ++n) verdicts.push_back(check_lemma(n, scope, conv));
      else
        verdicts.push_back(check_lemma(std::stoi(lemma), scope, conv));
      if (laws_json)
        out << make_report(conv, laws_seed, verdicts).dump(2) << "\n";
      else
        for (const auto& v : verdicts) out << render_verdict(v, max_witnesses);
      if (expect_paper)
        for (const auto& v : verdicts)
          if (!v.matches_claim) return claim_deviation;
      return ok;
    }

    if (examples->parsed()) {
      std::vector<LawVerdict> ledger;
      for (int n = 1; n <= 5; ++n) {
        if (example_n != 0 && n != example_n) continue;
        const Transcript t = reproduce_example(n);
        if (!examples_json) out << (ledger.empty() ? "" : "\n") << render(t);
        ledger.push_back(t.ledger);
      }
      if (examples_json) out << make_report(conv, 0, ledger).dump(2) << "\n";
      return ok;
    }

    if (moufang->parsed()) {
      MoufangOptions mo;
      mo.product = parse_moufang_product(product);
      mo.identity = identity;
      mo.trials = trials;
      mo.seed = moufang_seed;
      mo.form = form == "printed" ? MoufangForm::as_printed : MoufangForm::standard;
      for (const auto& text : moufang_u) {
        Multivector u;
        if (!eval_or_report(text, u)) return eval_error;
        mo.parameters.push_back(u);
      }
      const LawVerdict v = check_moufang(mo, conv);
      if (moufang_json)
        out << make_report(conv, moufang_seed, {v}).dump(2) << "\n";
      else
        out << render_verdict(v, max_witnesses);
      return ok;
    }

    if (sigma->parsed()) {
      const auto rows = sigma_scan(conv.odot);
      if (sigma_json) {
        std::vector<LawVerdict> body;
        for (const auto& r : rows) body.push_back(sigma_verdict(r));
        out << make_report(conv, 0, body).dump(2) << "\n";
        return ok;
      }
      for (const auto& r : rows) {
        out << describe(r.fold) << "\n";
        out << "  uniform +1 (" << r.plus.size() << "): " << blade_list(r.plus) << "\n";
        out << "  uniform -1 (" << r.minus.size() << "): " << blade_list(r.minus) << "\n";
        out << "  mixed (" << r.mixed.size() << "): " << blade_list(r.mixed) << "\n";
        if (!r.none.empty()) out << "  no sign (" << r.none.size() << "): " << blade_list(r.none) << "\n";
      }
      return ok;
    }

    if (thm1->parsed()) {
      const Theorem1Scan scan = theorem1_scan(thm1_samples, thm1_seed, conv);
      const std::string scope = "samples=" + std::to_string(thm1_samples) + " seed=" + std::to_string(thm1_seed);
      if (thm1_json) {
        ordered_json cases = ordered_json::array();
        for (const auto& c : scan.cases) {
          ordered_json j = {{"u", to_text(c.u)}, {"A", to_compact(c.a)}, {"B", to_compact(c.b)},
                            {"C", to_compact(c.c)}, {"collapse", c.collapse}};
          if (!c.error.empty()) {
            j["error"] = c.error;
          } else {
            j["sign"] = c.result.sign ? ordered_json(*c.result.sign) : ordered_json("NoMatch");
            j["lhs"] = to_compact(c.result.lhs);
            j["rhs"] = to_compact(c.result.rhs);
            j["twisted_parameter"] = to_compact(c.result.twisted_parameter);
          }
          cases.push_back(j);
        }
        ordered_json report = make_report(conv, thm1_seed, {theorem1_verdict(scan, scope)});
        report["cases"] = cases;
        out << report.dump(2) << "\n";
        return ok;
      }
      out << "thm1 [" << scope << "]\n";
      out << "  sign +1: " << scan.plus << "\n  sign -1: " << scan.minus << "\n  NoMatch: " << scan.no_match
          << "\n  errors: " << scan.errors << "\n";
      out << "  u = 1, B on S7: " << scan.collapse_plus << " of " << scan.collapse_cases << " with sign +1\n";
      std::size_t shown = 0;
      for (const auto& c : scan.cases) {
        if (c.error.empty() && c.result.sign == 1) continue;
        if (shown++ == max_witnesses) break;
        out << "    u=" << to_text(c.u) << " A=" << to_compact(c.a) << " B=" << to_compact(c.b)
            << " C=" << to_compact(c.c) << ": "
            << (c.error.empty() ? to_compact(c.result.lhs) + " vs " + to_compact(c.result.rhs) : c.error) << "\n";
      }
      return ok;
    }
  } catch (const AlgebraError& e) {
    print_error(err, e.kind(), e.what());
    return eval_error;
  } catch (const std::exception& e) {
    print_error(err, "Internal", e.what());
    return eval_error;
  }
  return usage_error;
}

}  // namespace octoclif
