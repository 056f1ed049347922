#pragma once

#include "octoclif/blade.hpp"
#include "octoclif/rational.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace octoclif {

struct Term {
  BladeIndex blade;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

// All 128 masks in canonical (grade, mask) order.
inline const std::array<BladeIndex, kBladeCount>& canonical_order() {
  static const auto order = [] {
    std::array<BladeIndex, kBladeCount> out;
    for (int m = 0; m < kBladeCount; ++m) out[m] = BladeIndex(static_cast<unsigned>(m));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return order;
}

}  // namespace detail

/// Sparse element of Cl(0,7). Terms are kept in canonical (grade, mask) order
/// with no zero coefficients, so equality is plain term-wise equality.
class Multivector {
 public:
  Multivector() = default;

  static Multivector scalar(const Rational& value) { return blade(BladeIndex::scalar(), value); }
  static Multivector blade(BladeIndex b, const Rational& coeff = 1) {
    Multivector out;
    if (!coeff.is_zero()) out.terms_.push_back({b, coeff});
    return out;
  }
  /// e_i for i in 1..7; e0 is the scalar unit.
  static Multivector generator(int i) {
    return i == 0 ? scalar(1) : blade(BladeIndex::generator(i));
  }
  /// Sums coefficients of repeated blades.
  static Multivector from_terms(std::span<const Term> terms);
  static Multivector from_terms(std::initializer_list<Term> terms) {
    return from_terms(std::span<const Term>(terms.begin(), terms.size()));
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(BladeIndex b) const {
    for (const auto& t : terms_)
      if (t.blade == b) return t.coeff;
    return 0;
  }
  Rational scalar_part() const { return coefficient(BladeIndex::scalar()); }

  /// Support contained in grades {0, 1}.
  bool is_paravector() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.blade.grade() <= 1; });
  }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].blade.mask() == 0); }
  /// True when every term has the same grade (zero counts as homogeneous).
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.blade.grade() == terms_.front().blade.grade(); });
  }

  Multivector operator-() const {
    Multivector out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }
  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b) { return a + (-b); }
  friend Multivector operator*(const Rational& s, const Multivector& x) {
    if (s.is_zero()) return {};
    Multivector out = x;
    for (auto& t : out.terms_) t.coeff *= s;
    return out;
  }
  Multivector& operator+=(const Multivector& b) { return *this = *this + b; }
  Multivector& operator-=(const Multivector& b) { return *this = *this - b; }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  friend class MultivectorAccumulator;
  std::vector<Term> terms_;
};

/// Dense scratch space for building a Multivector from many contributions.
class MultivectorAccumulator {
 public:
  void add(BladeIndex b, const Rational& value) {
    const auto m = b.mask();
    if (touched_[m]) {
      coeffs_[m] += value;
    } else {
      coeffs_[m] = value;
      touched_.set(m);
    }
  }
  void add(BladeIndex b, int sign, const Rational& value) {
    const auto m = b.mask();
    if (!touched_[m]) {
      coeffs_[m] = 0;
      touched_.set(m);
    }
    if (sign > 0)
      coeffs_[m] += value;
    else
      coeffs_[m] -= value;
  }
  Multivector finish() {
    Multivector out;
    for (BladeIndex b : detail::canonical_order()) {
      const auto m = b.mask();
      if (touched_[m] && !coeffs_[m].is_zero()) out.terms_.push_back({b, std::move(coeffs_[m])});
    }
    touched_.reset();
    return out;
  }

 private:
  std::array<Rational, kBladeCount> coeffs_;
  std::bitset<kBladeCount> touched_;
};

inline Multivector Multivector::from_terms(std::span<const Term> terms) {
  MultivectorAccumulator acc;
  for (const auto& t : terms) acc.add(t.blade, t.coeff);
  return acc.finish();
}

inline Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->blade < j->blade)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->blade < i->blade) {
      out.terms_.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (!s.is_zero()) out.terms_.push_back({i->blade, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Geometric product restricted to result blades whose grade bit is set in
/// `grade_mask` (bit k keeps grade k). Equals grade projection of the full
/// product but skips the discarded terms.
inline Multivector gp_projected(const Multivector& x, const Multivector& y, unsigned grade_mask) {
  MultivectorAccumulator acc;
  Rational prod;
  for (const auto& a : x.terms()) {
    for (const auto& b : y.terms()) {
      const unsigned m = a.blade.mask() ^ b.blade.mask();
      if (((grade_mask >> std::popcount(m)) & 1u) == 0) continue;
      const auto [sign, c] = blade_mul(a.blade, b.blade);
      prod = a.coeff * b.coeff;
      acc.add(c, sign, prod);
    }
  }
  return acc.finish();
}

inline constexpr unsigned kAllGrades = 0xFFu;
inline constexpr unsigned kParavectorGrades = 0x3u;

/// Geometric (Clifford) product in Cl(0,7).
inline Multivector gp(const Multivector& x, const Multivector& y) { return gp_projected(x, y, kAllGrades); }

inline Multivector operator*(const Multivector& x, const Multivector& y) { return gp(x, y); }

/// Exterior product: blades sharing a generator annihilate.
inline Multivector outer(const Multivector& x, const Multivector& y) {
  MultivectorAccumulator acc;
  for (const auto& a : x.terms())
    for (const auto& b : y.terms()) {
      if (a.blade.mask() & b.blade.mask()) continue;
      const auto [sign, c] = blade_mul(a.blade, b.blade);
      acc.add(c, sign, a.coeff * b.coeff);
    }
  return acc.finish();
}

namespace detail {
template <class SignFn>
Multivector scale_by_grade(const Multivector& x, SignFn sign) {
  std::vector<Term> out = x.terms();
  for (auto& t : out)
    if (sign(t.blade.grade()) < 0) t.coeff = -t.coeff;
  return Multivector::from_terms(out);
}
}  // namespace detail

inline Multivector grade_project(const Multivector& x, int k) {
  if (k < 0 || k > kGenerators) throw std::out_of_range("grade out of range");
  std::vector<Term> out;
  for (const auto& t : x.terms())
    if (t.blade.grade() == k) out.push_back(t);
  return Multivector::from_terms(out);
}

inline Multivector grade_project_01(const Multivector& x) {
  std::vector<Term> out;
  for (const auto& t : x.terms())
    if (t.blade.grade() <= 1) out.push_back(t);
  return Multivector::from_terms(out);
}

inline Multivector reversion(const Multivector& x) { return detail::scale_by_grade(x, reversion_sign); }
inline Multivector grade_involution(const Multivector& x) { return detail::scale_by_grade(x, involution_sign); }
inline Multivector conjugation(const Multivector& x) { return detail::scale_by_grade(x, conjugation_sign); }

/// Canonical text: terms in (grade, mask) order, `<coeff> <blade>` with the
/// scalar blade printed as its bare coefficient, e.g. `1 - 3/2 e1^e2`.
inline std::string to_text(const Multivector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    std::string coeff;
    if (first) {
      coeff = to_string(t.coeff);
    } else {
      out += t.coeff < 0 ? " - " : " + ";
      coeff = to_string(t.coeff < 0 ? Rational(-t.coeff) : t.coeff);
    }
    out += coeff;
    if (t.blade.mask() != 0) {
      out += ' ';
      out += t.blade.name();
    }
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Multivector& x) { return os << to_text(x); }

/// The grade-3 element whose projection defines the octonionic product:
/// e1e2e4 + e2e3e5 + e3e4e6 + e4e5e7 + e5e6e1 + e6e7e2 + e7e1e3.
inline const Multivector& psi() {
  static const Multivector value = [] {
    constexpr int triples[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
    Multivector out;
    for (const auto& t : triples)
      out += gp(gp(Multivector::generator(t[0]), Multivector::generator(t[1])), Multivector::generator(t[2]));
    return out;
  }();
  return value;
}

}  // namespace octoclif
