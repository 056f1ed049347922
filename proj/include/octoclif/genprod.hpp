#pragma once

// Products between octonions and Cl(0,7) elements that land back in the
// octonions: the folds •⌞ / •⌟, the Clifford-Clifford folds ⊙⌞ / ⊙⌟, and the
// twisted families ∘u, ∘(1,u), ∘(u,v), ∘(u,C) built from them.
//
// A basis blade is folded through its vector factors one ∘ at a time. Which
// factor list a blade expands into is a convention (FoldConvention); the
// worked examples instead pass an explicit Factored value that
// spells out the factors in the order they were written.

#include "octoclif/errors.hpp"
#include "octoclif/inverse.hpp"
#include "octoclif/multivector.hpp"
#include "octoclif/octonion.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace octoclif {

enum class FoldOrder { ascending, descending };
enum class OdotVariant { left, right };
enum class E7Rule { as_printed, corrected };

/// Factor order for blade expansion. `left_order` applies to factors that act
/// by right multiplication (the Clifford argument of •⌞, and v in ⊙⌟);
/// `right_order` to factors acting by left multiplication (•⌟, and u in ⊙⌞).
/// Descending lists the same generators in reverse without a sign change.
struct FoldConvention {
  FoldOrder left_order = FoldOrder::ascending;
  FoldOrder right_order = FoldOrder::ascending;

  friend bool operator==(const FoldConvention&, const FoldConvention&) = default;
};

struct Conventions {
  FoldConvention fold;
  OdotVariant odot = OdotVariant::left;
  E7Rule e7 = E7Rule::corrected;

  friend bool operator==(const Conventions&, const Conventions&) = default;
};

inline const char* to_string(FoldOrder o) { return o == FoldOrder::ascending ? "asc" : "desc"; }
inline const char* to_string(OdotVariant v) { return v == OdotVariant::left ? "left" : "right"; }
inline const char* to_string(E7Rule r) { return r == E7Rule::corrected ? "corrected" : "printed"; }

inline std::string describe(const FoldConvention& f) {
  return std::string("fold-left=") + to_string(f.left_order) + " fold-right=" + to_string(f.right_order);
}

/// The four fold-order combinations, default first.
inline std::array<FoldConvention, 4> all_fold_conventions() {
  using enum FoldOrder;
  return {FoldConvention{ascending, ascending}, FoldConvention{ascending, descending},
          FoldConvention{descending, ascending}, FoldConvention{descending, descending}};
}

/// coeff · f1 f2 ... fk with the generators listed in fold order.
struct FactoredBlade {
  Rational coeff = 1;
  std::vector<int> factors;
};

/// A Clifford element given as a sum of explicitly factored blades.
using Factored = std::vector<FactoredBlade>;

/// Expands each term of x into its generators in the requested order.
inline Factored factorize(const Multivector& x, FoldOrder order) {
  Factored out;
  out.reserve(x.size());
  for (const auto& t : x.terms()) {
    auto f = t.blade.factors();
    if (order == FoldOrder::descending) std::reverse(f.begin(), f.end());
    out.push_back({t.coeff, std::move(f)});
  }
  return out;
}

/// Written factorization, e.g. written({6, 7, 1, 3}) for e6e7e1e3.
inline Factored written(std::vector<int> factors, const Rational& coeff = 1) {
  return {FactoredBlade{coeff, std::move(factors)}};
}

/// Clifford value of a factored element (the product of its factors).
inline Multivector to_multivector(const Factored& x) {
  Multivector out;
  for (const auto& fb : x) {
    Multivector p = Multivector::scalar(fb.coeff);
    for (int f : fb.factors) p = gp(p, Multivector::generator(f));
    out += p;
  }
  return out;
}

namespace detail {

inline Octonion unit_vector(int i) { return Octonion::unit(i); }

// ((A∘f1)∘f2)...∘fk
inline Octonion fold_right_mult(Octonion a, const std::vector<int>& factors) {
  for (int f : factors) a = circ(a, unit_vector(f));
  return a;
}

// f1∘(f2∘(...(fk∘A)))
inline Octonion fold_left_mult(const std::vector<int>& factors, Octonion a) {
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) a = circ(unit_vector(*it), a);
  return a;
}

inline Octonion as_octonion(const Multivector& x, const char* role) {
  if (!x.is_paravector())
    throw TypeMismatchError(std::string(role) + " must be a paravector, got '" + to_text(x) + "'");
  return Octonion::from_multivector(x);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// •⌞ and •⌟

/// A •⌞ u: A is folded from the left through each blade's factors,
/// ((A∘u1)∘u2)...∘uk; a scalar blade a contributes a·A.
inline Octonion bullet_left(const Octonion& a, const Factored& u) {
  Octonion out;
  for (const auto& fb : u) out += fb.coeff * detail::fold_right_mult(a, fb.factors);
  return out;
}
inline Octonion bullet_left(const Octonion& a, const Multivector& u, const FoldConvention& conv = {}) {
  return bullet_left(a, factorize(u, conv.left_order));
}

/// u •⌟ A = u1∘(u2∘(...(uk∘A))); a scalar blade a contributes a·A.
inline Octonion bullet_right(const Factored& u, const Octonion& a) {
  Octonion out;
  for (const auto& fb : u) out += fb.coeff * detail::fold_left_mult(fb.factors, a);
  return out;
}
inline Octonion bullet_right(const Multivector& u, const Octonion& a, const FoldConvention& conv = {}) {
  return bullet_right(factorize(u, conv.right_order), a);
}

/// 1 •⌞ v
inline Octonion chi_left(const Multivector& v, const FoldConvention& conv = {}) {
  return bullet_left(Octonion::scalar(1), v, conv);
}
/// u •⌟ 1
inline Octonion chi_right(const Multivector& u, const FoldConvention& conv = {}) {
  return bullet_right(u, Octonion::scalar(1), conv);
}

// ---------------------------------------------------------------------------
// ⊙⌞ and ⊙⌟

/// u ⊙⌞ v = u1∘(u2∘(...(uk •⌞ v))); a scalar blade a of u gives a·(1 •⌞ v).
inline Octonion odot_left(const Factored& u, const Factored& v) {
  Octonion out;
  for (const auto& fb : u) {
    if (fb.factors.empty()) {
      out += fb.coeff * bullet_left(Octonion::scalar(1), v);
      continue;
    }
    Octonion acc = bullet_left(detail::unit_vector(fb.factors.back()), v);
    for (auto it = fb.factors.rbegin() + 1; it != fb.factors.rend(); ++it) acc = circ(detail::unit_vector(*it), acc);
    out += fb.coeff * acc;
  }
  return out;
}
inline Octonion odot_left(const Multivector& u, const Multivector& v, const FoldConvention& conv = {}) {
  return odot_left(factorize(u, conv.right_order), factorize(v, conv.left_order));
}

/// u ⊙⌟ v = ((u •⌟ v1)∘v2)...∘vk; a scalar blade b of v gives b·(u •⌟ 1).
inline Octonion odot_right(const Factored& u, const Factored& v) {
  Octonion out;
  for (const auto& fb : v) {
    if (fb.factors.empty()) {
      out += fb.coeff * bullet_right(u, Octonion::scalar(1));
      continue;
    }
    Octonion acc = bullet_right(u, detail::unit_vector(fb.factors.front()));
    for (auto it = fb.factors.begin() + 1; it != fb.factors.end(); ++it) acc = circ(acc, detail::unit_vector(*it));
    out += fb.coeff * acc;
  }
  return out;
}
inline Octonion odot_right(const Multivector& u, const Multivector& v, const FoldConvention& conv = {}) {
  return odot_right(factorize(u, conv.right_order), factorize(v, conv.left_order));
}

inline Octonion odot(const Multivector& u, const Multivector& v, const Conventions& conv) {
  return conv.odot == OdotVariant::left ? odot_left(u, v, conv.fold) : odot_right(u, v, conv.fold);
}

// ---------------------------------------------------------------------------
// Twisted products

/// An invertible Clifford parameter together with its inverse.
class Parameter {
 public:
  explicit Parameter(Multivector value) : value_(std::move(value)), inverse_(inverse(value_)) {}
  const Multivector& value() const { return value_; }
  const Multivector& inv() const { return inverse_; }

 private:
  Multivector value_;
  Multivector inverse_;
};

namespace detail {

// X•u when X is a paravector, X⊙u otherwise. Both ⊙ variants reduce to •⌞
// for a paravector left argument.
inline Octonion twist_left(const Multivector& x, const Multivector& u, const Conventions& conv) {
  if (x.is_paravector()) return bullet_left(Octonion::from_multivector(x), u, conv.fold);
  return odot(x, u, conv);
}

// w•X when X is a paravector, w⊙X otherwise.
inline Octonion twist_right(const Multivector& w, const Multivector& x, const Conventions& conv) {
  if (x.is_paravector()) return bullet_right(w, Octonion::from_multivector(x), conv.fold);
  return odot(w, x, conv);
}

}  // namespace detail

/// A ∘u B = (A•u)∘(u⁻¹•B), with • replaced by ⊙ for non-paravector arguments.
inline Octonion circ_u(const Parameter& u, const Multivector& a, const Multivector& b, const Conventions& conv = {}) {
  return circ(detail::twist_left(a, u.value(), conv), detail::twist_right(u.inv(), b, conv));
}
inline Octonion circ_u(const Multivector& u, const Multivector& a, const Multivector& b, const Conventions& conv = {}) {
  return circ_u(Parameter(u), a, b, conv);
}

/// A ∘(1,u) B = A∘(u⁻¹•B); a non-paravector A acts as A•(...), and a
/// non-paravector B uses u⁻¹⊙B.
inline Octonion circ_1u(const Parameter& u, const Multivector& a, const Multivector& b, const Conventions& conv = {}) {
  const Octonion rhs = detail::twist_right(u.inv(), b, conv);
  if (a.is_paravector()) return circ(Octonion::from_multivector(a), rhs);
  return bullet_right(a, rhs, conv.fold);
}
inline Octonion circ_1u(const Multivector& u, const Multivector& a, const Multivector& b, const Conventions& conv = {}) {
  return circ_1u(Parameter(u), a, b, conv);
}

/// A ∘(u,v) B = (A•u)∘(v⁻¹•B); only v has to be invertible.
inline Octonion circ_uv(const Multivector& u, const Parameter& v, const Multivector& a, const Multivector& b,
                        const Conventions& conv = {}) {
  return circ(detail::twist_left(a, u, conv), detail::twist_right(v.inv(), b, conv));
}
inline Octonion circ_uv(const Multivector& u, const Multivector& v, const Multivector& a, const Multivector& b,
                        const Conventions& conv = {}) {
  return circ_uv(u, Parameter(v), a, b, conv);
}

/// C = u⁻¹ ⊙ v⁻¹ with the configured ⊙.
inline Octonion make_C(const Multivector& u, const Multivector& v, const Conventions& conv = {}) {
  return odot(inverse(u), inverse(v), conv);
}

/// A ∘(u,C) B = (A•u)∘(C∘B).
inline Octonion circ_uC(const Multivector& u, const Octonion& c, const Octonion& a, const Octonion& b,
                        const Conventions& conv = {}) {
  return circ(bullet_left(a, u, conv.fold), circ(c, b));
}

// ---------------------------------------------------------------------------
// Clifford-parametrized units

struct EUnits {
  std::array<Octonion, 7> e;  // E1..E7
  /// Empty when non-degenerate; otherwise the reason.
  std::string degeneracy;
};

namespace detail {

// Rank of up to 8 octonions viewed as rows of an 8-column rational matrix.
inline int octonion_rank(std::vector<std::array<Rational, 8>> rows) {
  int rank = 0;
  for (int col = 0; col < 8 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int j = col; j < 8; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// E1..E7 without the degeneracy check: E_a = u•e_a for a in {1,2,3,5},
/// û•e_a for a in {4,6}, and E7 = û•e7 (corrected) or û•e1 (as printed).
inline EUnits e_units_unchecked(const Multivector& u, E7Rule rule, const FoldConvention& fold = {}) {
  const Multivector hat = grade_involution(u);
  EUnits out;
  for (int a = 1; a <= 7; ++a) {
    const bool uses_hat = a == 4 || a == 6 || a == 7;
    const int target = (a == 7 && rule == E7Rule::as_printed) ? 1 : a;
    out.e[a - 1] = bullet_right(uses_hat ? hat : u, Octonion::unit(target), fold);
  }
  for (int a = 0; a < 7; ++a)
    if (out.e[a].vector_part_is_zero()) {
      out.degeneracy = "E" + std::to_string(a + 1) + " = " + to_compact(out.e[a]) + " has no vector part";
      return out;
    }
  std::vector<std::array<Rational, 8>> rows;
  for (const auto& e : out.e) rows.push_back(e.components());
  if (detail::octonion_rank(rows) < 7) out.degeneracy = "E1..E7 are linearly dependent";
  return out;
}

/// E1..E7 for an invertible u; throws Degenerate when the units collapse.
inline std::array<Octonion, 7> e_units(const Multivector& u, E7Rule rule = E7Rule::corrected,
                                       const FoldConvention& fold = {}) {
  (void)inverse(u);
  EUnits units = e_units_unchecked(u, rule, fold);
  if (!units.degeneracy.empty())
    throw DegenerateError("e_units(" + to_text(u) + "): " + units.degeneracy);
  return units.e;
}

// ---------------------------------------------------------------------------
// Twisted-parameter identity: (A∘u B)∘u (B⁻¹∘u C) = ± A∘(B•u) C

struct Theorem1Result {
  std::optional<int> sign;  // +1 / -1, or empty for no match
  Octonion lhs;
  Octonion rhs;
  Octonion twisted_parameter;  // B•u
};

inline Theorem1Result theorem1_check(const Parameter& u, const Octonion& a, const Octonion& b, const Octonion& c,
                                     const Conventions& conv = {}) {
  const Octonion b_inv = oct_inverse(b);
  const Octonion left = circ_u(u, a.to_multivector(), b.to_multivector(), conv);
  const Octonion right = circ_u(u, b_inv.to_multivector(), c.to_multivector(), conv);
  Theorem1Result out;
  out.lhs = circ_u(u, left.to_multivector(), right.to_multivector(), conv);
  out.twisted_parameter = bullet_left(b, u.value(), conv.fold);
  out.rhs = circ_u(Parameter(out.twisted_parameter.to_multivector()), a.to_multivector(), c.to_multivector(), conv);
  if (out.lhs == out.rhs)
    out.sign = 1;
  else if (out.lhs == -out.rhs)
    out.sign = -1;
  return out;
}
inline Theorem1Result theorem1_check(const Multivector& u, const Octonion& a, const Octonion& b, const Octonion& c,
                                     const Conventions& conv = {}) {
  return theorem1_check(Parameter(u), a, b, c, conv);
}

}  // namespace octoclif
