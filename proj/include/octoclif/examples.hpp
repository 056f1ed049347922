#pragma once

// Step-by-step transcripts of the five worked examples. Every
// displayed step is re-derived from the hard-coded unit table; the final
// values are then recomputed with the evaluator under each fold convention.

#include "octoclif/laws.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace octoclif {

struct StepCheck {
  std::string expr;    // e.g. "-e2∘e5"
  Octonion printed;    // value written in the source
  Octonion table;      // value from the unit table
  bool ok() const { return printed == table; }
};

struct TranscriptStep {
  std::string line;
  std::vector<StepCheck> checks;
};

struct FinalValue {
  std::string label;
  Octonion printed;
  Octonion computed;
};

struct Transcript {
  int number = 0;
  std::string title;
  std::vector<TranscriptStep> steps;
  std::vector<FinalValue> finals;
  std::vector<std::string> sweep;
  std::string verdict;
  LawVerdict ledger;

  std::size_t flagged() const {
    std::size_t n = 0;
    for (const auto& s : steps)
      for (const auto& c : s.checks) n += !c.ok();
    return n;
  }
};

namespace detail {

/// Octonion product expanded over table_oracle only.
inline Octonion table_circ(const Octonion& x, const Octonion& y) {
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j)
      if (!y[j].is_zero()) out += (x[i] * y[j]) * table_oracle(i, j);
  }
  return out;
}

/// Signed unit from an integer: 3 -> e3, -3 -> -e3, 0 -> 1.
inline Octonion su(int a) {
  return a >= 0 ? Octonion::unit(a) : Octonion::unit(-a, -1);
}

inline StepCheck check(int x, int y, int printed) {
  const Octonion X = su(x), Y = su(y);
  std::string lhs = to_compact(X), rhs = to_compact(Y);
  if (rhs.front() == '-') rhs = "(" + rhs + ")";
  return {lhs + "∘" + rhs, su(printed), table_circ(X, Y)};
}

inline std::string mark(bool ok) { return ok ? "ok" : "MISMATCH"; }

inline void finish_ledger(Transcript& t) {
  VerdictBuilder vb("example" + std::to_string(t.number), "transcript");
  for (const auto& s : t.steps)
    for (const auto& c : s.checks) vb.add("table checks", c.expr, c.printed, c.table);
  for (const auto& f : t.finals) vb.add("finals", f.label, f.computed, f.printed);
  vb.note(t.verdict);
  t.ledger = vb.finish(Claim::holds);
}

inline std::string sweep_line(const FoldConvention& f, const std::string& value) {
  return describe(f) + ": " + value;
}

inline Multivector blade_of(std::initializer_list<int> gens) {
  Multivector out = Multivector::scalar(1);
  for (int g : gens) out = gp(out, Multivector::generator(g));
  return out;
}

}  // namespace detail

inline Transcript example1() {
  using detail::check;
  Transcript t;
  t.number = 1;
  t.title = "e1 ∘u e4 with u = e2e7";
  t.steps = {
      {"[e1•(e2e7)]∘[(e2e7)⁻¹•e4]", {}},
      {"[(e1∘e2)∘e7]∘[-e2∘(e7∘e4)]", {}},
      {"[e4∘e7]∘[-e2∘e5]", {check(1, 2, 4), check(7, 4, 5)}},
      {"-e5∘(-e3)", {check(4, 7, -5), check(-2, 5, -3)}},
      {"-e2", {check(-5, -3, -2)}},
  };
  const Multivector u = Multivector::blade(BladeIndex((1u << 1) | (1u << 6)));
  const Octonion printed = Octonion::unit(2, -1);
  std::string alt;
  for (const auto& f : all_fold_conventions()) {
    const Octonion v = circ_u(u, Multivector::generator(1), Multivector::generator(4), {f});
    t.sweep.push_back(detail::sweep_line(f, to_compact(v)) + (v == printed ? "  (matches printed)" : ""));
    if (v == printed && alt.empty()) alt = describe(f);
  }
  // The flagged step carried forward with its table value instead.
  const Octonion corrected = detail::table_circ(Octonion::unit(5, -1), Octonion::unit(3));
  t.steps.push_back({"table-consistent continuation: -e5∘e3", {{"-e5∘e3", corrected, corrected}}});
  t.finals.push_back({"e1 ∘u e4 (default conventions)", printed,
                      circ_u(u, Multivector::generator(1), Multivector::generator(4))});
  std::ostringstream v;
  v << "step conflict flagged (" << t.flagged() << "): the printed line uses -e2∘e5 = -e3, the table gives e3; "
    << "evaluator gives " << to_compact(t.finals[0].computed) << " against printed -e2";
  if (!alt.empty()) v << "; printed value reproduced under " << alt;
  t.verdict = v.str();
  detail::finish_ledger(t);
  return t;
}

inline Transcript example2() {
  using detail::check;
  Transcript t;
  t.number = 2;
  t.title = "e1 ∘(u,v) e4 with u = e4e6e7, v = e1e5";
  t.steps = {
      {"[e1•(e4e6e7)]∘[(e1e5)⁻¹•e4]", {}},
      {"[((e1∘e4)∘e6)∘e7]∘[-e1∘(e5∘e4)]", {}},
      {"[(-e2∘e6)∘e7]∘[-e1∘(-e7)]", {check(1, 4, -2), check(5, 4, -7)}},
      {"(-e7∘e7)∘(-e3)", {check(-2, 6, -7), check(-1, -7, -3)}},
      {"-e3", {check(-7, 7, 0), check(0, -3, -3)}},
  };
  const Multivector u = detail::blade_of({4, 6, 7}), v = detail::blade_of({1, 5});
  const Octonion printed = Octonion::unit(3, -1);
  for (const auto& f : all_fold_conventions()) {
    const Octonion r = circ_uv(u, v, Multivector::generator(1), Multivector::generator(4), {f});
    t.sweep.push_back(detail::sweep_line(f, to_compact(r)) + (r == printed ? "  (matches printed)" : ""));
  }
  t.finals.push_back({"e1 ∘(u,v) e4 (default conventions)", printed,
                      circ_uv(u, v, Multivector::generator(1), Multivector::generator(4))});
  t.verdict = t.finals[0].computed == printed ? "matches printed -e3" : "DEVIATES from printed -e3";
  detail::finish_ledger(t);
  return t;
}

inline Transcript example3() {
  Transcript t;
  t.number = 3;
  t.title = "(u•A)∘(B•u) against u•(A∘B)•u for grade-4 u";
  const auto cases = example3_cases();
  // Unit-table derivation of each printed side, factors folded as written.
  struct Derivation {
    std::vector<int> u;
    int a, b;
  };
  const Derivation defs[] = {{{6, 7, 1, 3}, 2, 5}, {{1, 2, 3, 6}, 4, 7}};
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& d = defs[k];
    const auto& pc = cases[k];
    auto fold_right = [&](Octonion x) {  // u•X = u1∘(u2∘(...(uk∘X)))
      for (auto it = d.u.rbegin(); it != d.u.rend(); ++it) x = detail::table_circ(Octonion::unit(*it), x);
      return x;
    };
    auto fold_left = [&](Octonion x) {  // X•u = ((X∘u1)∘u2)...
      for (int f : d.u) x = detail::table_circ(x, Octonion::unit(f));
      return x;
    };
    const Octonion A = Octonion::unit(d.a), B = Octonion::unit(d.b);
    const Octonion uA = fold_right(A), Bu = fold_left(B);
    const Octonion lhs = detail::table_circ(uA, Bu);
    const Octonion AB = detail::table_circ(A, B);
    const Octonion rhs = fold_left(fold_right(AB));
    const Octonion pl = pc.printed_lhs, pr = pc.printed_rhs;
    TranscriptStep s{pc.label + ": u•A = " + to_compact(uA) + ", B•u = " + to_compact(Bu) + ", A∘B = " +
                         to_compact(AB) + ", u•(A∘B)•u = " + to_compact(rhs),
                     {}};
    s.checks.push_back({"(u•A)∘(B•u)", pl, lhs});
    s.checks.push_back({"u•(A∘B)•u", pr, rhs});
    t.steps.push_back(std::move(s));
    t.finals.push_back({pc.label + " lhs", pl, pc.lhs});
    t.finals.push_back({pc.label + " rhs", pr, pc.rhs});
  }
  // Canonical (ascending) factor lists under every fold convention.
  const Multivector us[] = {detail::blade_of({6, 7, 1, 3}), detail::blade_of({1, 2, 3, 6})};
  for (const auto& f : all_fold_conventions()) {
    std::string line;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& d = defs[k];
      const auto [l, r] = detail::bullet_moufang_sides(1, detail::factored_of(us[k], f), Octonion::unit(d.a),
                                                       Octonion::unit(d.b));
      line += (k ? "; " : "") + std::string(k ? "case 2 " : "case 1 ") + to_compact(l) + " vs " + to_compact(r);
    }
    t.sweep.push_back(detail::sweep_line(f, line));
  }
  bool reproduced = true;
  for (const auto& f : t.finals) reproduced = reproduced && f.printed == f.computed;
  std::ostringstream v;
  if (reproduced) {
    v << "both printed cases reproduced";
  } else {
    v << "printed values not reproduced from the unit table: case 1 gives " << to_compact(t.finals[0].computed)
      << " vs " << to_compact(t.finals[1].computed) << " (printed -e4 = -e4), case 2 gives "
      << to_compact(t.finals[2].computed) << " vs " << to_compact(t.finals[3].computed)
      << " (printed e6 vs -e6); the same-grade sign clash the example argues for still occurs, with the cases "
         "swapped";
  }
  t.verdict = v.str();
  detail::finish_ledger(t);
  return t;
}

inline Transcript example4() {
  using detail::check;
  Transcript t;
  t.number = 4;
  t.title = "e1e2 ⊙⌞ e3e4";
  t.steps = {
      {"e1∘(e2•(e3e4))", {}},
      {"e1∘(e5∘e4)", {check(2, 3, 5)}},
      {"e1∘(-e7)", {check(5, 4, -7)}},
      {"e3", {check(1, -7, 3)}},
  };
  const Multivector a = detail::blade_of({1, 2}), b = detail::blade_of({3, 4});
  const Octonion printed = Octonion::unit(3);
  for (const auto& f : all_fold_conventions()) {
    const Octonion r = odot_left(a, b, f);
    t.sweep.push_back(detail::sweep_line(f, to_compact(r)) + (r == printed ? "  (matches printed)" : ""));
  }
  t.finals.push_back({"e1e2 ⊙⌞ e3e4 (default conventions)", printed, odot_left(a, b)});
  t.verdict = t.finals[0].computed == printed ? "matches printed e3" : "DEVIATES from printed e3";
  detail::finish_ledger(t);
  return t;
}

inline Transcript example5() {
  using detail::check;
  Transcript t;
  t.number = 5;
  t.title = "Moufang pattern under ⊙⌞ with A = e7e3, B = e5e4, C = e1e6";
  t.steps = {
      {"e7e3⊙⌞(e5e4⊙⌞e1e6)⊙⌞e7e3 = e7e3⊙⌞(e5∘(e4•e1e6))⊙⌞e7e3", {}},
      {"e7e3⊙⌞(e5∘(e2∘e6))⊙⌞e7e3", {check(4, 1, 2)}},
      {"e7e3⊙⌞(e5∘e7)⊙⌞e7e3", {check(2, 6, 7)}},
      {"e7e3⊙⌞e4⊙⌞e7e3", {check(5, 7, 4)}},
      {"(e7∘e6)•e7e3", {check(3, 4, 6)}},
      {"-e2•e7e3", {check(7, 6, -2)}},
      {"e6∘e3", {check(-2, 7, 6)}},
      {"e4", {check(6, 3, 4)}},
      {"(e7e3⊙⌞e5e4)⊙⌞(e1e6⊙⌞e7e3) = (e7∘(e2∘e4))∘(e1∘(e2∘e3))", {check(3, 5, 2), check(6, 7, 2)}},
      {"(e7∘e1)∘(e1∘e5)", {check(2, 4, 1), check(2, 3, 5)}},
      {"e3∘e6", {check(7, 1, 3), check(1, 5, 6)}},
      {"-e4", {check(3, 6, -4)}},
  };
  const auto pc = example5_cases().front();
  t.finals.push_back({"A⊙(B⊙C)⊙A, factors as written", Octonion::unit(4), pc.lhs});
  t.finals.push_back({"(A⊙B)⊙(C⊙A), factors as written", Octonion::unit(4, -1), pc.rhs});
  // Canonical ascending blades: e3e7 = -e7e3 etc.
  const Multivector A = detail::blade_of({7, 3}), B = detail::blade_of({5, 4}), C = detail::blade_of({1, 6});
  for (const auto& f : all_fold_conventions()) {
    auto p = [&](const Multivector& x, const Multivector& y) { return odot_left(x, y, f).to_multivector(); };
    const Multivector l = p(p(A, p(B, C)), A), r = p(p(A, B), p(C, A));
    t.sweep.push_back(detail::sweep_line(f, to_compact(Octonion::from_multivector(l)) + " vs " +
                                                to_compact(Octonion::from_multivector(r))));
  }
  const bool reproduced = t.finals[0].computed == t.finals[0].printed && t.finals[1].computed == t.finals[1].printed;
  t.verdict = reproduced ? "counterexample reproduced: e4 vs -e4"
                         : "counterexample NOT reproduced: " + to_compact(pc.lhs) + " vs " + to_compact(pc.rhs);
  detail::finish_ledger(t);
  return t;
}

inline Transcript reproduce_example(int n) {
  switch (n) {
    case 1: return example1();
    case 2: return example2();
    case 3: return example3();
    case 4: return example4();
    case 5: return example5();
  }
  throw std::out_of_range("example number must be 1..5");
}

inline std::string render(const Transcript& t) {
  std::ostringstream os;
  os << "Example " << t.number << ": " << t.title << "\n";
  int k = 1;
  for (const auto& s : t.steps) {
    os << "  step " << k++ << ": " << s.line << "\n";
    for (const auto& c : s.checks) {
      os << "      " << c.expr << " = " << to_compact(c.printed) << "  " << detail::mark(c.ok());
      if (!c.ok()) os << " (table gives " << to_compact(c.table) << ")";
      os << "\n";
    }
  }
  for (const auto& f : t.finals)
    os << "  " << f.label << ": computed " << to_compact(f.computed) << ", printed " << to_compact(f.printed)
       << "\n";
  if (!t.sweep.empty()) {
    os << "  fold conventions:\n";
    for (const auto& s : t.sweep) os << "    " << s << "\n";
  }
  os << "  verdict: " << t.verdict << "\n";
  return os.str();
}

}  // namespace octoclif
