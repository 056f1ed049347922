// One PASS/FAIL line per acceptance criterion. `--full` runs the 128^3
// associativity sweep instead of the sampled one.

#include "octoclif/cli.hpp"
#include "octoclif/random.hpp"

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace octoclif;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt_s(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  run_cli(std::move(args), out, err);
  return out.str();
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(OCTOCLIF_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome table_product() {
  const auto t0 = Clock::now();
  const LawVerdict v = verify_table_circ();
  const double s = seconds_since(t0);
  return {v.status == Status::holds && v.case_count == 64 && s < 1.0,
          std::to_string(v.case_count) + " pairs, " + fmt_s(s)};
}

Outcome index_identity() {
  int ok = 0;
  for (int a = 1; a <= 7; ++a) {
    const int b = a % 7 + 1, c = (a + 2) % 7 + 1;
    ok += circ(Octonion::unit(a), Octonion::unit(b)) == Octonion::unit(c);
  }
  return {ok == 7, std::to_string(ok) + "/7 indices"};
}

Outcome moufang() {
  const auto t0 = Clock::now();
  std::string d;
  bool pass = true;
  for (int id = 1; id <= 4; ++id) {
    MoufangOptions o;
    o.identity = id;
    o.trials = 500;
    o.seed = 2024;
    const LawVerdict v = check_moufang(o);
    pass = pass && v.status == Status::holds && v.case_count == 500;
    d += "mou" + std::to_string(id - 1) + " " + to_string(v.status) + ", ";
  }
  const double s = seconds_since(t0);
  return {pass && s < 5.0, d + fmt_s(s)};
}

Outcome examples() {
  const Transcript t1 = example1(), t2 = example2(), t3 = example3(), t4 = example4(), t5 = example5();
  auto finals_match = [](const Transcript& t) {
    for (const auto& f : t.finals)
      if (f.printed != f.computed) return false;
    return true;
  };
  const bool ex245 = finals_match(t2) && finals_match(t4) && finals_match(t5);
  const std::string r1 = render(t1);
  const bool ex1 = t1.flagged() == 1 && r1.find("computed " + to_compact(t1.finals[0].computed) + ", printed -e2") !=
                                            std::string::npos;
  // Example 3 passes on a deterministic, documented verdict; the printed
  // values themselves are not reproduced.
  const bool ex3_repro = finals_match(t3);
  const bool ex3 = t3.finals.size() == 4 && render(t3) == render(example3()) && !t3.verdict.empty();
  std::string d = std::string("ex2/4/5 ") + (ex245 ? "match" : "DIFFER") + ", ex1 flagged " +
                  std::to_string(t1.flagged()) + " step (evaluator " + to_compact(t1.finals[0].computed) +
                  " vs printed -e2), ex3 " +
                  (ex3_repro ? "reproduced" : "printed values NOT reproduced, deterministic verdict recorded");
  return {ex245 && ex1 && ex3, d};
}

Outcome lemmas() {
  const auto t0 = Clock::now();
  bool pass = true;
  std::string d;
  for (int n : {1, 2, 3, 5}) {
    const LawVerdict v = check_lemma(n, {});
    int graded = 0;
    for (const auto& g : v.sign_pattern) graded += g.key.find("grade ") != std::string::npos;
    const bool reported = graded >= 8 && (v.status == Status::holds || !v.witnesses.empty());
    pass = pass && reported && v.case_count >= 128u * 7u;
    d += "L" + std::to_string(n) + " " + to_string(v.status) + ", ";
  }
  for (const auto& f : all_fold_conventions()) {
    const LawVerdict v = check_lemma4({}, {f});
    pass = pass && v.status == Status::holds && v.case_count >= 128u * 7u;
  }
  d += "L4 holds under all folds";
  const double s = seconds_since(t0);
  return {pass && s < 60.0, d + ", " + fmt_s(s)};
}

Outcome e_unit_table() {
  const auto e = e_units(Multivector::scalar(1));
  bool pass = true;
  for (int a = 1; a <= 7; ++a) pass = pass && e[a - 1] == Octonion::unit(a);
  pass = pass && verify_table_eunits(Multivector::scalar(1)).status == Status::holds;
  Scope s = parse_scope("sampled");
  s.samples = 10;
  s.seed = 2024;
  const LawVerdict l6 = check_lemma6(s);
  const bool sampled = l6.case_count >= 10u * 42u;
  std::size_t cells = 0;
  std::string d;
  const Multivector u = evaluate("e2*e7");
  for (E7Rule r : {E7Rule::as_printed, E7Rule::corrected}) {
    Conventions c;
    c.e7 = r;
    const LawVerdict v = verify_table_eunits(u, c);
    for (const auto& g : v.sign_pattern)
      if (g.key == "cells") cells += g.cases;
    d += std::string("E7 ") + to_string(r) + ": " + to_string(v.status) + (v.notes.empty() ? "" : " (degenerate)") +
         ", ";
  }
  return {pass && sampled && cells == 98,
          "e_units(1) = e, lemma6 on 10 sampled u " + std::string(to_string(l6.status)) + ", u=e2e7 table " + d +
              std::to_string(cells) + " cells"};
}

Outcome sigma() {
  const auto t0 = Clock::now();
  const auto a = sigma_scan();
  const double s = seconds_since(t0);
  const auto b = sigma_scan();
  bool pass = a.size() == 4;
  std::string d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pass = pass && a[i].plus == b[i].plus && a[i].minus == b[i].minus && a[i].mixed == b[i].mixed &&
           a[i].plus.size() + a[i].minus.size() + a[i].mixed.size() + a[i].none.size() == 128;
    d += describe(a[i].fold) + " +" + std::to_string(a[i].plus.size()) + "/-" + std::to_string(a[i].minus.size()) +
         "/mixed " + std::to_string(a[i].mixed.size()) + "; ";
  }
  return {pass && s < 60.0, d + fmt_s(s)};
}

Outcome theorem1() {
  const Theorem1Scan scan = theorem1_scan(1000, 2024);
  bool witnessed = true;
  for (const auto& c : scan.cases)
    if (c.error.empty() && !c.result.sign) witnessed = witnessed && !to_compact(c.result.lhs).empty();
  const bool pass = scan.cases.size() >= 1000 && scan.errors == 0 && witnessed && scan.collapse_cases > 0 &&
                    scan.collapse_plus == scan.collapse_cases;
  return {pass, std::to_string(scan.cases.size()) + " cases: +1 " + std::to_string(scan.plus) + ", -1 " +
                    std::to_string(scan.minus) + ", NoMatch " + std::to_string(scan.no_match) + "; collapse " +
                    std::to_string(scan.collapse_plus) + "/" + std::to_string(scan.collapse_cases) + " +1"};
}

Outcome associativity(bool full) {
  const auto t0 = Clock::now();
  std::size_t checked = 0, bad = 0;
  auto check = [&](unsigned x, unsigned y, unsigned z) {
    const Multivector a = Multivector::blade(BladeIndex(x)), b = Multivector::blade(BladeIndex(y)),
                      c = Multivector::blade(BladeIndex(z));
    ++checked;
    bad += gp(gp(a, b), c) != gp(a, gp(b, c));
  };
  if (full) {
    for (unsigned x = 0; x < kBladeCount; ++x)
      for (unsigned y = 0; y < kBladeCount; ++y)
        for (unsigned z = 0; z < kBladeCount; ++z) check(x, y, z);
  } else {
    Rng rng(2024);
    for (int i = 0; i < 100000; ++i) {
      const int x = rng.uniform(0, kBladeCount - 1), y = rng.uniform(0, kBladeCount - 1),
                z = rng.uniform(0, kBladeCount - 1);
      check(x, y, z);
    }
  }
  int inverses = 0;
  for (BladeIndex b : detail::canonical_order()) {
    const Multivector u = Multivector::blade(b);
    inverses += gp(inverse(u), u) == Multivector::scalar(1);
  }
  const double s = seconds_since(t0);
  return {bad == 0 && inverses == 128 && s < 600.0,
          std::to_string(checked) + (full ? " triples (full)" : " sampled triples") + ", " + std::to_string(bad) +
              " failures, inverse(b)b = 1 for " + std::to_string(inverses) + "/128, " + fmt_s(s)};
}

Outcome round_trip() {
  Rng rng(2024);
  int text_ok = 0, json_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const Multivector x =
        Rational(rng.uniform(-50, 50), rng.uniform(1, 12)) * rng.multivector(6) + rng.multivector(2);
    text_ok += evaluate(to_text(x)) == x;
    json_ok += multivector_from_json(nlohmann::json::parse(to_json(x).dump())) == x;
  }
  int goldens = 0, stable = 0;
  std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"table", "circ"}, "table_circ.txt"},
      {{"laws", "--lemma", "4", "--json"}, "laws_lemma4.json"},
      {{"eval", "let u = e2*e7; circU(u; e1, e4)"}, "eval_example1.txt"}};
  for (int n = 1; n <= 5; ++n) cases.push_back({{"examples", "--n", std::to_string(n)}, "examples_" + std::to_string(n) + ".txt"});
  for (const auto& [args, file] : cases) {
    const std::string a = cli_out(args);
    goldens += a == golden(file);
    stable += a == cli_out(args);
  }
  const int n = static_cast<int>(cases.size());
  return {text_ok == 1000 && json_ok == 1000 && goldens == n && stable == n,
          "text " + std::to_string(text_ok) + "/1000, json " + std::to_string(json_ok) + "/1000, goldens " +
              std::to_string(goldens) + "/" + std::to_string(n) + ", stable " + std::to_string(stable) + "/" +
              std::to_string(n)};
}

}  // namespace

int main(int argc, char** argv) {
  bool full = false;
  for (int i = 1; i < argc; ++i) full = full || std::strcmp(argv[i], "--full") == 0;

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"unit product table, 64 pairs", table_product},
      {"index identity e_a e_(a+1) = e_(a+3)", index_identity},
      {"Moufang identities, 500 triples each", moufang},
      {"worked examples", examples},
      {"exhaustive lemma scans", lemmas},
      {"E-units and their table", e_unit_table},
      {"homogeneous-unit sign scan", sigma},
      {"twisted-parameter identity scan", theorem1},
      {"geometric product associativity and blade inverses", [full] { return associativity(full); }},
      {"text/JSON round-trip and golden outputs", round_trip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
