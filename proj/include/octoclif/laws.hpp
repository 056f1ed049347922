#pragma once

// Verdict ledger: exact checks of the identities claimed for the generalized
// products. Every check evaluates both sides exactly and classifies each case
// as equal (+1), equal up to sign (-1) or unrelated (0). Cases are grouped
// (by grade, blade or sample) so sign patterns can be reported per group.

#include "octoclif/genprod.hpp"
#include "octoclif/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace octoclif {

enum class Status { holds, holds_with_sign, fails };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::holds_with_sign: return "holds_with_sign";
    case Status::fails: return "fails";
  }
  return "?";
}

struct Witness {
  std::string group;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

/// Sign summary of one case group. `sign` is +1 or -1 when every case in the
/// group agrees with that sign, 0 when both signs occur; `other` counts cases
/// matching neither sign.
struct SignGroup {
  std::string key;
  std::size_t cases = 0;
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t other = 0;

  int sign() const {
    if (minus == 0) return 1;
    if (plus == 0) return -1;
    return 0;
  }
  bool uniform() const { return other == 0 && sign() != 0; }

  /// "+1", "-1", "±1" (both signs), "partial" (some cases match neither
  /// sign) or "none" (no case matches up to sign).
  std::string pattern() const {
    if (other == 0) return minus == 0 ? "+1" : plus == 0 ? "-1" : "±1";
    return plus + minus == 0 ? "none" : "partial";
  }
};

struct LawVerdict {
  std::string law;
  std::string scope;
  Status status = Status::holds;
  std::vector<SignGroup> sign_pattern;
  std::vector<Witness> witnesses;
  std::size_t case_count = 0;
  double elapsed_ms = 0;
  /// What the source asserts for this law, and whether the verdict agrees.
  std::string claim;
  bool matches_claim = true;
  std::vector<std::string> notes;
};

enum class Claim { holds, fails, none };

/// Accumulates classified cases in insertion order.
class VerdictBuilder {
 public:
  VerdictBuilder(std::string law, std::string scope) {
    v_.law = std::move(law);
    v_.scope = std::move(scope);
  }

  /// Records lhs against rhs; returns the case sign (+1, -1 or 0).
  int add(const std::string& group, const std::string& inputs, const Octonion& lhs, const Octonion& rhs) {
    int s = 0;
    if (lhs == rhs)
      s = 1;
    else if (lhs == -rhs)
      s = -1;
    add_classified(group, inputs, s, to_compact(lhs), to_compact(rhs));
    return s;
  }

  void add_classified(const std::string& group, const std::string& inputs, int sign, std::string lhs,
                      std::string rhs) {
    SignGroup& g = group_for(group);
    ++g.cases;
    ++v_.case_count;
    if (sign > 0)
      ++g.plus;
    else if (sign < 0)
      ++g.minus;
    else
      ++g.other;
    if (sign <= 0) v_.witnesses.push_back({group, inputs, std::move(lhs), std::move(rhs)});
  }

  void note(std::string text) { v_.notes.push_back(std::move(text)); }

  /// Groups whose key is listed in `informative` (e.g. cases outside the
  /// stated domain) are reported but do not decide the status.
  LawVerdict finish(Claim claim, const std::vector<std::string>& informative = {}) {
    bool all_plus = true;
    bool all_uniform = true;
    for (const auto& g : v_.sign_pattern) {
      if (std::find(informative.begin(), informative.end(), g.key) != informative.end()) continue;
      if (!g.uniform()) all_uniform = false;
      if (g.other != 0 || g.minus != 0) all_plus = false;
    }
    v_.status = all_plus ? Status::holds : all_uniform ? Status::holds_with_sign : Status::fails;
    switch (claim) {
      case Claim::holds:
        v_.claim = "holds";
        v_.matches_claim = v_.status == Status::holds;
        break;
      case Claim::fails:
        v_.claim = "fails";
        v_.matches_claim = v_.status != Status::holds;
        break;
      case Claim::none:
        v_.claim = "none";
        v_.matches_claim = true;
        break;
    }
    v_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(v_);
  }

 private:
  SignGroup& group_for(const std::string& key) {
    auto it = index_.find(key);
    if (it != index_.end()) return v_.sign_pattern[it->second];
    index_.emplace(key, v_.sign_pattern.size());
    v_.sign_pattern.push_back({key});
    return v_.sign_pattern.back();
  }

  LawVerdict v_;
  std::map<std::string, std::size_t> index_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

namespace detail {

/// Evaluates f(0..n-1) on worker threads; results come back in index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<std::pair<std::size_t, R>>>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::vector<std::pair<std::size_t, R>> part;
      for (std::size_t i = w; i < n; i += workers) part.emplace_back(i, f(i));
      return part;
    }));
  std::vector<std::optional<R>> slots(n);
  for (auto& j : jobs)
    for (auto& [i, r] : j.get()) slots[i] = std::move(r);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct CaseRecord {
  std::string group;
  std::string inputs;
  Octonion lhs;
  Octonion rhs;
};

inline std::string unit_name(int a) { return a == 0 ? "1" : "e" + std::to_string(a); }

inline std::string grade_key(const char* prefix, int grade) {
  return std::string(prefix) + "grade " + std::to_string(grade);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Scopes

enum class ScopeKind { exhaustive, grade, sampled };

struct Scope {
  ScopeKind kind = ScopeKind::exhaustive;
  int grade = 0;            // for ScopeKind::grade
  int samples = 16;         // for ScopeKind::sampled
  std::uint64_t seed = 1;   // for ScopeKind::sampled

  std::string describe() const {
    switch (kind) {
      case ScopeKind::exhaustive: return "exhaustive";
      case ScopeKind::grade: return "grade" + std::to_string(grade);
      case ScopeKind::sampled: return "sampled(" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")";
    }
    return "?";
  }

  /// Parameters u to scan: basis blades, or random invertible elements.
  std::vector<Multivector> parameters() const {
    std::vector<Multivector> out;
    if (kind == ScopeKind::sampled) {
      Rng rng(seed);
      for (int i = 0; i < samples; ++i) out.push_back(rng.invertible());
      return out;
    }
    for (BladeIndex b : detail::canonical_order())
      if (kind == ScopeKind::exhaustive || b.grade() == grade) out.push_back(Multivector::blade(b));
    return out;
  }
};

inline Scope parse_scope(const std::string& text) {
  if (text == "exhaustive") return {};
  if (text == "sampled") return {ScopeKind::sampled};
  if (text.rfind("grade", 0) == 0 && text.size() == 6 && text[5] >= '0' && text[5] <= '7')
    return {ScopeKind::grade, text[5] - '0'};
  throw std::invalid_argument("unknown scope '" + text + "' (expected exhaustive, gradeK or sampled)");
}

namespace detail {

inline std::string param_group(const Multivector& u, const Scope& scope, const char* prefix = "") {
  if (scope.kind == ScopeKind::sampled) return std::string(prefix) + "u=" + to_text(u);
  return grade_key(prefix, u.terms().front().blade.grade());
}

inline int param_grade(const Multivector& u) { return u.terms().front().blade.grade(); }

template <class PerParam>
LawVerdict scan_parameters(const std::string& law, const Scope& scope, Claim claim, PerParam per_param,
                           const std::vector<std::string>& informative = {},
                           const std::vector<std::string>& notes = {}) {
  VerdictBuilder vb(law, scope.describe());
  const auto params = scope.parameters();
  auto results = parallel_map(params.size(), [&](std::size_t i) { return per_param(params[i]); });
  for (const auto& cases : results)
    for (const auto& c : cases) vb.add(c.group, c.inputs, c.lhs, c.rhs);
  for (const auto& n : notes) vb.note(n);
  return vb.finish(claim, informative);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemmas

inline LawVerdict check_lemma1(const Scope& scope, const Conventions& conv = {}) {
  return detail::scan_parameters("lemma1", scope, Claim::holds, [&](const Multivector& u) {
    std::vector<detail::CaseRecord> out;
    const Multivector hat = grade_involution(u);
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b) {
        const Octonion A = Octonion::unit(a), B = Octonion::unit(b);
        const std::string in = "u=" + to_text(u) + " A=" + detail::unit_name(a) + " B=" + detail::unit_name(b);
        out.push_back({detail::param_group(u, scope, "(u•A)∘B=û•(A∘B) "), in,
                       circ(bullet_right(u, A, conv.fold), B), bullet_right(hat, circ(A, B), conv.fold)});
        out.push_back({detail::param_group(u, scope, "A∘(B•u)=(A∘B)•û "), in,
                       circ(A, bullet_left(B, u, conv.fold)), bullet_left(circ(A, B), hat, conv.fold)});
      }
    return out;
  });
}

inline LawVerdict check_lemma2(const Scope& scope, const Conventions& conv = {}) {
  std::vector<std::string> informative;
  for (int g = 0; g <= 7; ++g) informative.push_back(detail::grade_key("A=B ", g));
  if (scope.kind == ScopeKind::sampled) informative.clear();
  auto v = detail::scan_parameters(
      "lemma2", scope, Claim::holds,
      [&](const Multivector& u) {
        std::vector<detail::CaseRecord> out;
        for (int a = 1; a <= 7; ++a)
          for (int b = 1; b <= 7; ++b) {
            const Octonion A = Octonion::unit(a), B = Octonion::unit(b);
            const std::string in = "u=" + to_text(u) + " A=" + detail::unit_name(a) + " B=" + detail::unit_name(b);
            std::string group = detail::param_group(u, scope, a == b ? "A=B " : "");
            out.push_back({group, in, circ(bullet_right(u, A, conv.fold), B),
                           -circ(bullet_right(u, B, conv.fold), A)});
          }
        return out;
      },
      informative,
      {"A=B cases are reported separately: (u•A)∘A = -(u•A)∘A can only hold for zero, so the anticommutation "
       "claim is read for A != B"});
  return v;
}

inline LawVerdict check_lemma3(const Scope& scope, const Conventions& conv = {}) {
  std::vector<std::string> informative = {"grade 6 (outside stated domain)"};
  return detail::scan_parameters(
      "lemma3", scope, Claim::holds,
      [&](const Multivector& u) {
        std::vector<detail::CaseRecord> out;
        const Multivector bar = conjugation(u);
        const bool blade = u.size() == 1;
        const int grade = detail::param_grade(u);
        for (int a = 1; a <= 7; ++a) {
          const Octonion A = Octonion::unit(a);
          const std::string in = "u=" + to_text(u) + " A=" + detail::unit_name(a);
          std::string group = (blade && grade == 6 && scope.kind != ScopeKind::sampled)
                                  ? std::string("grade 6 (outside stated domain)")
                                  : detail::param_group(u, scope);
          const Octonion lhs = bullet_right(u, A, conv.fold);
          out.push_back({group, in, lhs, bullet_left(A, bar, conv.fold)});
          if (blade && grade == 6 && !u.terms().front().blade.contains(a)) {
            // Disjoint special case: u•A = -1 = A•u.
            out.push_back({"grade 6 special: u•A=-1", in, lhs, Octonion::scalar(-1)});
            out.push_back({"grade 6 special: A•u=-1", in, bullet_left(A, u, conv.fold), Octonion::scalar(-1)});
          }
        }
        return out;
      },
      informative);
}

inline LawVerdict check_lemma4(const Scope& scope, const Conventions& conv = {}) {
  return detail::scan_parameters("lemma4", scope, Claim::holds, [&](const Multivector& u) {
    std::vector<detail::CaseRecord> out;
    const Multivector uinv = inverse(u);
    for (int a = 1; a <= 7; ++a) {
      const Octonion A = Octonion::unit(a);
      const std::string in = "u=" + to_text(u) + " A=" + detail::unit_name(a);
      out.push_back({detail::param_group(u, scope, "u⁻¹•(u•A)=A "), in,
                     bullet_right(uinv, bullet_right(u, A, conv.fold), conv.fold), A});
      out.push_back({detail::param_group(u, scope, "(A•u)•u⁻¹=A "), in,
                     bullet_left(bullet_left(A, u, conv.fold), uinv, conv.fold), A});
    }
    return out;
  });
}

inline LawVerdict check_lemma5(const Scope& scope, const Conventions& conv = {}) {
  return detail::scan_parameters("lemma5", scope, Claim::holds, [&](const Multivector& u) {
    std::vector<detail::CaseRecord> out;
    for (int a = 1; a <= 7; ++a) {
      const Octonion A = Octonion::unit(a);
      const std::string in = "u=" + to_text(u) + " A=" + detail::unit_name(a);
      out.push_back({detail::param_group(u, scope), in, bullet_right(u, bullet_left(A, u, conv.fold), conv.fold),
                     bullet_left(bullet_right(u, A, conv.fold), u, conv.fold)});
    }
    return out;
  });
}

/// E_a ∘(1,u) E_b = -E_b ∘(1,u) E_a for the units built from u. Degenerate
/// parameters are skipped and counted in the notes.
inline LawVerdict check_lemma6(const Scope& scope, const Conventions& conv = {}) {
  std::vector<std::string> informative;
  for (int g = 0; g <= 7; ++g) informative.push_back(detail::grade_key("a=b ", g));
  VerdictBuilder vb("lemma6", scope.describe());
  std::vector<Multivector> params;
  if (scope.kind == ScopeKind::sampled) {
    // Draw until `samples` admissible parameters are found.
    Rng rng(scope.seed);
    std::size_t rejected = 0;
    while (static_cast<int>(params.size()) < scope.samples) {
      Multivector u = rng.invertible();
      if (e_units_unchecked(u, conv.e7, conv.fold).degeneracy.empty())
        params.push_back(std::move(u));
      else if (++rejected > 100000)
        break;
    }
    vb.note(std::to_string(rejected) + " sampled parameters rejected as degenerate");
  } else {
    params = scope.parameters();
  }
  auto results = detail::parallel_map(params.size(), [&](std::size_t i) {
    const Multivector& u = params[i];
    std::vector<detail::CaseRecord> out;
    const EUnits units = e_units_unchecked(u, conv.e7, conv.fold);
    if (!units.degeneracy.empty()) return std::make_pair(out, true);
    const Parameter p(u);
    for (int a = 1; a <= 7; ++a)
      for (int b = 1; b <= 7; ++b) {
        const Multivector Ea = units.e[a - 1].to_multivector(), Eb = units.e[b - 1].to_multivector();
        const std::string in = "u=" + to_text(u) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
        const std::string group =
            scope.kind == ScopeKind::sampled ? detail::param_group(u, scope, a == b ? "a=b " : "")
                                             : detail::grade_key(a == b ? "a=b " : "", detail::param_grade(u));
        out.push_back({group, in, circ_1u(p, Ea, Eb, conv), -circ_1u(p, Eb, Ea, conv)});
      }
    return std::make_pair(out, false);
  });
  std::size_t skipped = 0;
  for (const auto& [cases, degenerate] : results) {
    skipped += degenerate;
    for (const auto& c : cases) vb.add(c.group, c.inputs, c.lhs, c.rhs);
  }
  vb.note(std::to_string(skipped) + " of " + std::to_string(params.size()) +
          " parameters skipped as degenerate for e_units (E7 rule: " + to_string(conv.e7) + ")");
  vb.note("a=b cases are reported separately: X ∘ X = -(X ∘ X) forces zero");
  if (scope.kind == ScopeKind::sampled) informative.clear();
  return vb.finish(Claim::holds, informative);
}

inline LawVerdict check_lemma(int n, const Scope& scope, const Conventions& conv = {}) {
  switch (n) {
    case 1: return check_lemma1(scope, conv);
    case 2: return check_lemma2(scope, conv);
    case 3: return check_lemma3(scope, conv);
    case 4: return check_lemma4(scope, conv);
    case 5: return check_lemma5(scope, conv);
    case 6: return check_lemma6(scope, conv);
  }
  throw std::out_of_range("lemma number must be 1..6");
}

// ---------------------------------------------------------------------------
// Moufang identities

enum class MoufangProduct { circ, circ_1u, odot_left, odot_right, bullet };

inline const char* to_string(MoufangProduct p) {
  switch (p) {
    case MoufangProduct::circ: return "circ";
    case MoufangProduct::circ_1u: return "circ1u";
    case MoufangProduct::odot_left: return "odotL";
    case MoufangProduct::odot_right: return "odotR";
    case MoufangProduct::bullet: return "bullet";
  }
  return "?";
}

inline MoufangProduct parse_moufang_product(const std::string& s) {
  if (s == "circ") return MoufangProduct::circ;
  if (s == "circ1u" || s == "circ1U") return MoufangProduct::circ_1u;
  if (s == "odotL" || s == "odot_left") return MoufangProduct::odot_left;
  if (s == "odotR" || s == "odot_right") return MoufangProduct::odot_right;
  if (s == "bullet") return MoufangProduct::bullet;
  throw std::invalid_argument("unknown product '" + s + "' (expected circ, circ1u, odotL, odotR, bullet)");
}

/// Identity 3 as printed, (A∘B)∘(C∘A) = A∘(C∘B)∘A, contradicts identity 1
/// unless B and C commute; `standard` reads it as (A∘B)∘(C∘A) = A∘((B∘C)∘A).
enum class MoufangForm { standard, as_printed };

namespace detail {

/// Both sides of Moufang identity `id` (1..4) for a binary product.
template <class T, class P>
std::pair<T, T> moufang_sides(int id, MoufangForm form, const T& a, const T& b, const T& c, P p) {
  switch (id) {
    case 1: return {p(p(a, b), p(c, a)), p(p(a, p(b, c)), a)};
    case 2: return {p(p(p(a, b), a), c), p(a, p(b, p(a, c)))};
    case 3:
      if (form == MoufangForm::as_printed) return {p(p(a, b), p(c, a)), p(p(a, p(c, b)), a)};
      return {p(p(a, b), p(c, a)), p(a, p(p(b, c), a))};
    case 4: return {p(c, p(p(a, b), a)), p(p(p(c, a), b), a)};
  }
  throw std::out_of_range("Moufang identity must be 1..4");
}

/// The identity with the repeated argument replaced by a Clifford u acting
/// through •, e.g. (u•A)∘(B•u) = (u•(A∘B))•u for identity 1.
inline std::pair<Octonion, Octonion> bullet_moufang_sides(int id, const Factored& u, const Octonion& a,
                                                          const Octonion& b) {
  auto ul = [&](const Octonion& x) { return bullet_right(u, x); };  // u•X
  auto ur = [&](const Octonion& x) { return bullet_left(x, u); };   // X•u
  switch (id) {
    case 1: return {circ(ul(a), ur(b)), ur(ul(circ(a, b)))};
    case 2: return {circ(ur(ul(a)), b), ul(circ(a, ul(b)))};
    case 3: return {circ(ul(a), ur(b)), ul(ur(circ(a, b)))};
    case 4: return {circ(b, ur(ul(a))), ur(circ(ur(b), a))};
  }
  throw std::out_of_range("Moufang identity must be 1..4");
}

inline Factored factored_of(const Multivector& x, const FoldConvention& f) { return factorize(x, f.right_order); }

}  // namespace detail

struct MoufangOptions {
  MoufangProduct product = MoufangProduct::circ;
  int identity = 1;
  int trials = 500;
  std::uint64_t seed = 1;
  MoufangForm form = MoufangForm::standard;
  /// Parameters for circ_1u; sampled when empty.
  std::vector<Multivector> parameters;
  int sampled_parameters = 10;
};

/// A worked counterexample evaluated as written, reported with the
/// printed sides next to the computed ones.
struct ReferenceCase {
  std::string label;
  Octonion lhs, rhs;
  Octonion printed_lhs, printed_rhs;
};

inline std::vector<ReferenceCase> example3_cases() {
  std::vector<ReferenceCase> out;
  struct Def {
    std::vector<int> u;
    int a, b;
    int pl, pr;
  };
  for (const Def& d : {Def{{6, 7, 1, 3}, 2, 5, -4, -4}, Def{{1, 2, 3, 6}, 4, 7, 6, -6}}) {
    const auto [l, r] = detail::bullet_moufang_sides(1, written(d.u), Octonion::unit(d.a), Octonion::unit(d.b));
    std::string uname;
    for (int f : d.u) uname += "e" + std::to_string(f);
    out.push_back({"u=" + uname + " A=e" + std::to_string(d.a) + " B=e" + std::to_string(d.b), l, r,
                   Octonion::unit(std::abs(d.pl), d.pl < 0 ? -1 : 1), Octonion::unit(std::abs(d.pr), d.pr < 0 ? -1 : 1)});
  }
  return out;
}

inline std::vector<ReferenceCase> example5_cases() {
  // A = e7e3, B = e5e4, C = e1e6 as written; nested results re-enter as vectors.
  const Factored a = written({7, 3}), b = written({5, 4}), c = written({1, 6});
  auto as_factored = [](const Octonion& x) {
    Factored out;
    for (int i = 0; i < 8; ++i)
      if (!x[i].is_zero()) out.push_back({x[i], i == 0 ? std::vector<int>{} : std::vector<int>{i}});
    return out;
  };
  auto p = [&](const Factored& x, const Factored& y) { return as_factored(odot_left(x, y)); };
  const Factored lhs = p(p(a, p(b, c)), a);
  const Factored rhs = p(p(a, b), p(c, a));
  auto value = [](const Factored& f) { return Octonion::from_multivector(to_multivector(f)); };
  return {{"A=e7e3 B=e5e4 C=e1e6 (odotL)", value(lhs), value(rhs), Octonion::unit(4), Octonion::unit(4, -1)}};
}

inline LawVerdict check_moufang(const MoufangOptions& opt, const Conventions& conv = {}) {
  const std::string law = std::string("moufang") + (opt.product == MoufangProduct::circ_1u ? "1u_" : "") +
                          std::to_string(opt.identity) + (opt.form == MoufangForm::as_printed ? "_printed" : "");
  VerdictBuilder vb(law, std::string(to_string(opt.product)) + " trials=" + std::to_string(opt.trials) +
                             " seed=" + std::to_string(opt.seed));
  Rng rng(opt.seed);
  Claim claim = Claim::holds;

  switch (opt.product) {
    case MoufangProduct::circ: {
      auto p = [](const Octonion& x, const Octonion& y) { return circ(x, y); };
      for (int t = 0; t < opt.trials; ++t) {
        const Octonion a = rng.octonion(), b = rng.octonion(), c = rng.octonion();
        const auto [l, r] = detail::moufang_sides(opt.identity, opt.form, a, b, c, p);
        vb.add("random", "A=" + to_compact(a) + " B=" + to_compact(b) + " C=" + to_compact(c), l, r);
      }
      if (opt.form == MoufangForm::as_printed) claim = Claim::fails;
      break;
    }
    case MoufangProduct::circ_1u: {
      std::vector<Multivector> params = opt.parameters;
      if (params.empty()) {
        params.push_back(Multivector::scalar(1));
        for (int i = 0; i < opt.sampled_parameters; ++i) params.push_back(rng.invertible(2));
      }
      for (const auto& u : params) {
        const Parameter pu(u);
        auto p = [&](const Octonion& x, const Octonion& y) {
          return circ_1u(pu, x.to_multivector(), y.to_multivector(), conv);
        };
        for (int t = 0; t < opt.trials; ++t) {
          const Octonion a = rng.octonion(), b = rng.octonion(), c = rng.octonion();
          const auto [l, r] = detail::moufang_sides(opt.identity, opt.form, a, b, c, p);
          vb.add("u=" + to_text(u), "u=" + to_text(u) + " A=" + to_compact(a) + " B=" + to_compact(b) +
                                        " C=" + to_compact(c), l, r);
        }
      }
      break;
    }
    case MoufangProduct::odot_left:
    case MoufangProduct::odot_right: {
      claim = Claim::fails;
      const bool left = opt.product == MoufangProduct::odot_left;
      auto p = [&](const Multivector& x, const Multivector& y) {
        return (left ? odot_left(x, y, conv.fold) : odot_right(x, y, conv.fold)).to_multivector();
      };
      for (int t = 0; t < opt.trials; ++t) {
        const Multivector a = Multivector::blade(rng.blade(1, 4), rng.uniform(0, 1) ? 1 : -1);
        const Multivector b = Multivector::blade(rng.blade(1, 4), rng.uniform(0, 1) ? 1 : -1);
        const Multivector c = Multivector::blade(rng.blade(1, 4), rng.uniform(0, 1) ? 1 : -1);
        const auto [l, r] = detail::moufang_sides(opt.identity, opt.form, a, b, c, p);
        vb.add("random blades", "A=" + to_text(a) + " B=" + to_text(b) + " C=" + to_text(c),
               Octonion::from_multivector(l), Octonion::from_multivector(r));
      }
      if (left && opt.identity == 1)
        for (const auto& pc : example5_cases()) {
          vb.add("worked counterexample (as written)", pc.label + " printed " + to_compact(pc.printed_lhs) + " vs " +
                                                               to_compact(pc.printed_rhs), pc.lhs, pc.rhs);
        }
      break;
    }
    case MoufangProduct::bullet: {
      claim = Claim::fails;
      for (int t = 0; t < opt.trials; ++t) {
        const Multivector u = Multivector::blade(rng.blade(1, 7));
        const Octonion a = Octonion::unit(rng.uniform(1, 7)), b = Octonion::unit(rng.uniform(1, 7));
        const auto [l, r] = detail::bullet_moufang_sides(opt.identity, detail::factored_of(u, conv.fold), a, b);
        vb.add(detail::grade_key("", detail::param_grade(u)),
               "u=" + to_text(u) + " A=" + to_compact(a) + " B=" + to_compact(b), l, r);
      }
      if (opt.identity == 1)
        for (const auto& pc : example3_cases())
          vb.add("worked cases (as written)",
                 pc.label + " printed " + to_compact(pc.printed_lhs) + " vs " + to_compact(pc.printed_rhs), pc.lhs, pc.rhs);
      break;
    }
  }
  if (opt.form == MoufangForm::as_printed)
    vb.note("identity 3 as printed: (A∘B)∘(C∘A) = A∘(C∘B)∘A");
  return vb.finish(claim);
}

// ---------------------------------------------------------------------------
// Tables

/// The Clifford-defined product against the hard-coded table on all 64 pairs (unit included).
inline LawVerdict verify_table_circ() {
  VerdictBuilder vb("table3", "64 pairs");
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      vb.add(a == 0 || b == 0 ? "unit row/column" : "imaginary units",
             detail::unit_name(a) + "∘" + detail::unit_name(b), circ(Octonion::unit(a), Octonion::unit(b)),
             table_oracle(a, b));
  return vb.finish(Claim::holds);
}

/// The (1,u) table of E1..E7 against the printed E-table (the e-table with
/// e -> E, and -1 on the diagonal), plus Lemma 6 anticommutation per cell.
inline LawVerdict verify_table_eunits(const Multivector& u, const Conventions& conv = {}) {
  VerdictBuilder vb("table5", "u=" + to_text(u) + " E7=" + to_string(conv.e7));
  const Parameter p(u);
  const EUnits units = e_units_unchecked(u, conv.e7, conv.fold);
  if (!units.degeneracy.empty()) vb.note("degenerate units: " + units.degeneracy);
  for (int a = 1; a <= 7; ++a)
    for (int b = 1; b <= 7; ++b) {
      const Octonion expected_e = table_oracle(a, b);
      Octonion expected;
      if (a == b) {
        expected = Octonion::scalar(-1);
      } else {
        for (int c = 1; c <= 7; ++c)
          if (!expected_e[c].is_zero()) expected = expected_e[c] * units.e[c - 1];
      }
      const Multivector Ea = units.e[a - 1].to_multivector(), Eb = units.e[b - 1].to_multivector();
      const std::string cell = "E" + std::to_string(a) + "∘E" + std::to_string(b);
      vb.add("cells", cell, circ_1u(p, Ea, Eb, conv), expected);
      if (a != b) vb.add("lemma6 anticommutation", cell, circ_1u(p, Ea, Eb, conv), -circ_1u(p, Eb, Ea, conv));
    }
  return vb.finish(Claim::holds);
}

// ---------------------------------------------------------------------------
// Homogeneous-unit sign scan

enum class SigmaClass { plus, minus, mixed, none };

struct SigmaRow {
  FoldConvention fold;
  std::vector<BladeIndex> plus, minus, mixed, none;
};

/// For each basis blade u and each fold convention, compares circ_u(u; e_a, e_b)
/// with e_a∘e_b over all 49 unit pairs and classifies the sign behaviour.
inline std::vector<SigmaRow> sigma_scan(OdotVariant odot = OdotVariant::left) {
  std::vector<SigmaRow> rows;
  for (const auto& fold : all_fold_conventions()) {
    const Conventions conv{fold, odot};
    const auto& order = detail::canonical_order();
    auto classes = detail::parallel_map(order.size(), [&](std::size_t i) {
      const Parameter p(Multivector::blade(order[i]));
      bool plus = false, minus = false, other = false;
      for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b) {
          const Octonion got = circ_u(p, Multivector::generator(a), Multivector::generator(b), conv);
          const Octonion ref = circ(Octonion::unit(a), Octonion::unit(b));
          if (got == ref)
            plus = true;
          else if (got == -ref)
            minus = true;
          else
            other = true;
        }
      return other ? SigmaClass::none : (plus && minus) ? SigmaClass::mixed : plus ? SigmaClass::plus
                                                                                    : SigmaClass::minus;
    });
    SigmaRow row{fold};
    for (std::size_t i = 0; i < order.size(); ++i) {
      switch (classes[i]) {
        case SigmaClass::plus: row.plus.push_back(order[i]); break;
        case SigmaClass::minus: row.minus.push_back(order[i]); break;
        case SigmaClass::mixed: row.mixed.push_back(order[i]); break;
        case SigmaClass::none: row.none.push_back(order[i]); break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Verdict view of one sigma row: the claim is σ = +1 for every blade.
inline LawVerdict sigma_verdict(const SigmaRow& row) {
  VerdictBuilder vb("sigma_scan", describe(row.fold));
  for (BladeIndex b : row.plus) vb.add_classified("uniform +1", "u=" + b.name(), 1, "", "");
  for (BladeIndex b : row.minus) vb.add_classified("uniform -1", "u=" + b.name(), -1, "σ=-1", "");
  for (BladeIndex b : row.mixed) vb.add_classified("mixed", "u=" + b.name(), 0, "mixed signs", "");
  for (BladeIndex b : row.none) vb.add_classified("no sign", "u=" + b.name(), 0, "not ± e_a∘e_b", "");
  return vb.finish(Claim::holds, {"uniform -1"});
}

// ---------------------------------------------------------------------------
// Twisted-parameter identity scan

struct Theorem1Case {
  Multivector u;
  Octonion a, b, c;
  Theorem1Result result;
  bool collapse = false;  // u = 1 with B on S7
  std::string error;      // Singular twisted parameter etc.
};

struct Theorem1Scan {
  std::vector<Theorem1Case> cases;
  std::size_t plus = 0, minus = 0, no_match = 0, errors = 0;
  std::size_t collapse_cases = 0, collapse_plus = 0;
};

/// The first eighth of the samples (at least 8) are u = 1 collapse cases with
/// B a signed unit; the rest draw u from the basis blades and A, B, C from the
/// signed units.
inline Theorem1Scan theorem1_scan(int samples, std::uint64_t seed, const Conventions& conv = {}) {
  Rng rng(seed);
  std::vector<Theorem1Case> todo;
  const int collapse = std::min(samples, std::max(8, samples / 8));
  for (int i = 0; i < samples; ++i) {
    Theorem1Case c;
    c.collapse = i < collapse;
    c.u = c.collapse ? Multivector::scalar(1) : Multivector::blade(rng.blade());
    c.a = rng.signed_unit();
    c.b = rng.signed_unit();
    c.c = rng.signed_unit();
    todo.push_back(std::move(c));
  }
  auto done = detail::parallel_map(todo.size(), [&](std::size_t i) {
    Theorem1Case c = todo[i];
    try {
      c.result = theorem1_check(c.u, c.a, c.b, c.c, conv);
    } catch (const AlgebraError& e) {
      c.error = e.kind() + ": " + e.what();
    }
    return c;
  });
  Theorem1Scan out;
  for (auto& c : done) {
    if (!c.error.empty())
      ++out.errors;
    else if (!c.result.sign)
      ++out.no_match;
    else if (*c.result.sign > 0)
      ++out.plus;
    else
      ++out.minus;
    if (c.collapse) {
      ++out.collapse_cases;
      if (c.error.empty() && c.result.sign == 1) ++out.collapse_plus;
    }
    out.cases.push_back(std::move(c));
  }
  return out;
}

inline LawVerdict theorem1_verdict(const Theorem1Scan& scan, const std::string& scope) {
  VerdictBuilder vb("thm1", scope);
  for (const auto& c : scan.cases) {
    const std::string in = "u=" + to_text(c.u) + " A=" + to_compact(c.a) + " B=" + to_compact(c.b) +
                           " C=" + to_compact(c.c);
    const std::string group = c.collapse ? "u=1, B on S7" : "blade u";
    if (!c.error.empty()) {
      vb.add_classified(group, in, 0, c.error, "");
      continue;
    }
    // ± is part of the claim, so either sign counts as agreement.
    const int s = c.result.sign ? 1 : 0;
    if (s == 0)
      vb.add_classified(group, in, 0, to_compact(c.result.lhs), to_compact(c.result.rhs));
    else
      vb.add_classified(group, in, 1, "", "");
  }
  vb.note("sign +1: " + std::to_string(scan.plus) + ", sign -1: " + std::to_string(scan.minus) +
          ", no match: " + std::to_string(scan.no_match) + ", errors: " + std::to_string(scan.errors));
  return vb.finish(Claim::holds);
}

// ---------------------------------------------------------------------------
// Unit law of the (1,u) product and blade factorization independence

/// u ∘(1,u) A = A (left unit) and A ∘(1,u) u = A (right unit) for sampled
/// invertible u and random octonions A, plus every basis blade.
inline LawVerdict check_unit_law(int samples, std::uint64_t seed, const Conventions& conv = {}) {
  VerdictBuilder vb("unit_law_1u", "blades + sampled(" + std::to_string(samples) + ",seed=" + std::to_string(seed) +
                                       ") odot=" + to_string(conv.odot));
  Rng rng(seed);
  std::vector<std::pair<std::string, Multivector>> params;
  for (BladeIndex b : detail::canonical_order())
    params.emplace_back(detail::grade_key("blade ", b.grade()), Multivector::blade(b));
  for (int i = 0; i < samples; ++i) params.emplace_back("sampled", rng.invertible());
  for (const auto& [group, u] : params) {
    const Parameter p(u);
    const Octonion a = rng.octonion();
    const std::string in = "u=" + to_text(u) + " A=" + to_compact(a);
    vb.add("left unit, " + group, in, circ_1u(p, u, a.to_multivector(), conv), a);
    vb.add("right unit, " + group, in, circ_1u(p, a.to_multivector(), u, conv), a);
  }
  return vb.finish(Claim::holds);
}

namespace detail {

// Orthogonal (unnormalized) integer-combination basis of span{e_i : i in blade}.
inline std::vector<Octonion> random_orthogonal_factors(BladeIndex blade, Rng& rng) {
  const auto gens = blade.factors();
  for (;;) {
    std::vector<Octonion> raw;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Octonion v;
      for (int g : gens) v[g] = rng.uniform(-2, 2);
      raw.push_back(v);
    }
    std::vector<Octonion> ortho;
    bool ok = true;
    for (const auto& v : raw) {
      Octonion w = v;
      for (const auto& q : ortho) {
        Rational dot = 0;
        for (int g : gens) dot += v[g] * q[g];
        w = w - (dot / norm(q)) * q;
      }
      if (norm(w).is_zero()) {
        ok = false;
        break;
      }
      ortho.push_back(w);
    }
    if (ok) return ortho;
  }
}

}  // namespace detail

/// Whether • and ⊙ depend on the vector factorization of a blade: each sampled
/// blade is rewritten as a scaled product of random orthogonal vectors and the
/// folds are repeated with those factors.
inline LawVerdict check_factorization(int samples, std::uint64_t seed) {
  VerdictBuilder vb("factorization", "sampled(" + std::to_string(samples) + ",seed=" + std::to_string(seed) + ")");
  Rng rng(seed);
  bool bullet_same = true, odot_same = true;
  for (int i = 0; i < samples; ++i) {
    const BladeIndex blade = rng.blade(2, 7);
    const auto factors = detail::random_orthogonal_factors(blade, rng);
    Multivector prod = Multivector::scalar(1);
    for (const auto& f : factors) prod = gp(prod, f.to_multivector());
    const Rational scale = 1 / prod.coefficient(blade);
    const Octonion a = Octonion::unit(rng.uniform(1, 7));
    const Multivector v = Multivector::blade(rng.blade(1, 3));

    // u•A and A•u with general vector factors.
    Octonion right = a, left = a;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) right = circ(*it, right);
    for (const auto& f : factors) left = circ(left, f);
    const Multivector u = Multivector::blade(blade);
    const std::string in = "u=" + blade.name() + " A=" + to_compact(a) + " v=" + to_text(v);
    bullet_same = vb.add(detail::grade_key("u•A ", blade.grade()), in, scale * right, bullet_right(u, a)) == 1 &&
                  bullet_same;
    bullet_same = vb.add(detail::grade_key("A•u ", blade.grade()), in, scale * left, bullet_left(a, u)) == 1 &&
                  bullet_same;

    // u⊙⌞v: u1∘(...∘(uk•v)).
    Octonion od = bullet_left(factors.back(), v);
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) od = circ(*it, od);
    odot_same = vb.add(detail::grade_key("u⊙⌞v ", blade.grade()), in, scale * od, odot_left(u, v)) == 1 && odot_same;
  }
  vb.note(std::string("• ") + (bullet_same ? "agrees" : "disagrees") + " across factorizations; ⊙⌞ " +
          (odot_same ? "agrees" : "disagrees"));
  return vb.finish(Claim::none);
}

}  // namespace octoclif
