#pragma once

#include "octoclif/errors.hpp"
#include "octoclif/multivector.hpp"

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>

namespace octoclif {

/// Paravector view x0 + x1 e1 + ... + x7 e7 of Cl(0,7). Index 0 is the unit.
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<Rational, 8> components) : x_(std::move(components)) {}

  static Octonion scalar(const Rational& s) {
    Octonion out;
    out.x_[0] = s;
    return out;
  }
  /// e_a for a in 0..7 (e0 = 1).
  static Octonion unit(int a, const Rational& coeff = 1) {
    if (a < 0 || a > 7) throw std::out_of_range("octonion unit index out of range");
    Octonion out;
    out.x_[a] = coeff;
    return out;
  }

  /// Requires support in grades {0, 1}.
  static Octonion from_multivector(const Multivector& m) {
    Octonion out;
    for (const auto& t : m.terms()) {
      if (t.blade.grade() > 1)
        throw TypeMismatchError("'" + to_text(m) + "' is not a paravector (has grade " +
                                std::to_string(t.blade.grade()) + ")");
      const int idx = t.blade.mask() == 0 ? 0 : std::countr_zero(t.blade.mask()) + 1;
      out.x_[idx] = t.coeff;
    }
    return out;
  }
  Multivector to_multivector() const {
    std::vector<Term> terms;
    for (int a = 0; a < 8; ++a)
      if (!x_[a].is_zero()) terms.push_back({a == 0 ? BladeIndex::scalar() : BladeIndex::generator(a), x_[a]});
    return Multivector::from_terms(terms);
  }

  const Rational& operator[](int a) const { return x_[a]; }
  Rational& operator[](int a) { return x_[a]; }
  const std::array<Rational, 8>& components() const { return x_; }

  bool is_zero() const {
    for (const auto& c : x_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool vector_part_is_zero() const {
    for (int a = 1; a < 8; ++a)
      if (!x_[a].is_zero()) return false;
    return true;
  }

  Octonion operator-() const {
    Octonion out = *this;
    for (auto& c : out.x_) c = -c;
    return out;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) {
    for (int i = 0; i < 8; ++i) a.x_[i] += b.x_[i];
    return a;
  }
  friend Octonion operator-(Octonion a, const Octonion& b) {
    for (int i = 0; i < 8; ++i) a.x_[i] -= b.x_[i];
    return a;
  }
  friend Octonion operator*(const Rational& s, Octonion a) {
    for (auto& c : a.x_) c *= s;
    return a;
  }
  Octonion& operator+=(const Octonion& b) {
    for (int i = 0; i < 8; ++i) x_[i] += b.x_[i];
    return *this;
  }

  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<Rational, 8> x_;
};

/// Text form `x0 + x1 e1 + ...` omitting zero terms; same as the Multivector text.
inline std::string to_text(const Octonion& x) { return to_text(x.to_multivector()); }

/// Short form used in transcripts: unit coefficients are shown by sign only,
/// e.g. `e4`, `-e5`, `-1`, `1/2 + 1/2 e1`.
inline std::string to_compact(const Octonion& x) {
  std::string out;
  for (int a = 0; a < 8; ++a) {
    const Rational& c = x[a];
    if (c.is_zero()) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + " ";
      out += "e" + std::to_string(a);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::ostream& operator<<(std::ostream& os, const Octonion& x) { return os << to_text(x); }

/// A∘B = <A B (1 - psi)>_{0+1}, evaluated directly in Cl(0,7).
inline Octonion circ_clifford(const Octonion& a, const Octonion& b) {
  static const Multivector one_minus_psi = Multivector::scalar(1) - psi();
  const Multivector ab = gp(a.to_multivector(), b.to_multivector());
  return Octonion::from_multivector(gp_projected(ab, one_minus_psi, kParavectorGrades));
}

namespace detail {

struct SignedUnit {
  int sign;
  int index;
};

// e_a∘e_b for a, b in 0..7, obtained once from circ_clifford. Each product of
// basis units is a signed basis unit.
inline const std::array<std::array<SignedUnit, 8>, 8>& circ_structure() {
  static const auto table = [] {
    std::array<std::array<SignedUnit, 8>, 8> out{};
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const Octonion p = circ_clifford(Octonion::unit(a), Octonion::unit(b));
        int found = -1;
        for (int c = 0; c < 8; ++c) {
          if (p[c].is_zero()) continue;
          if (found >= 0 || (p[c] != 1 && p[c] != -1)) throw std::logic_error("basis product is not a signed unit");
          found = c;
          out[a][b] = {p[c] > 0 ? 1 : -1, c};
        }
        if (found < 0) throw std::logic_error("basis product vanished");
      }
    return out;
  }();
  return table;
}

}  // namespace detail

/// Octonionic product. Bilinear expansion over the basis products of
/// circ_clifford; agrees with circ_clifford on all inputs.
inline Octonion circ(const Octonion& a, const Octonion& b) {
  const auto& s = detail::circ_structure();
  Octonion out;
  Rational prod;
  for (int i = 0; i < 8; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j].is_zero()) continue;
      prod = a[i] * b[j];
      if (s[i][j].sign > 0)
        out[s[i][j].index] += prod;
      else
        out[s[i][j].index] -= prod;
    }
  }
  return out;
}

/// Multiplication table of the imaginary units as printed, kept independent
/// of circ. Entries are {sign, index}, index 0 meaning the scalar 1.
inline Octonion table_oracle(int a, int b) {
  if (a < 0 || a > 7 || b < 0 || b > 7) throw std::out_of_range("table index out of range");
  if (a == 0) return Octonion::unit(b);
  if (b == 0) return Octonion::unit(a);
  // Rows e1..e7, columns e1..e7.
  static constexpr int table[7][7] = {
      {-0, 4, 7, -2, 6, -5, -3},   //
      {-4, -0, 5, 1, -3, 7, -6},   //
      {-7, -5, -0, 6, 2, -4, 1},   //
      {2, -1, -6, -0, 7, 3, -5},   //
      {-6, 3, -2, -7, -0, 1, 4},   //
      {5, -7, 4, -3, -1, -0, 2},   //
      {3, 6, -1, 5, -4, -2, -0}};  //
  if (a == b) return Octonion::scalar(-1);
  const int entry = table[a - 1][b - 1];
  return entry > 0 ? Octonion::unit(entry) : Octonion::unit(-entry, -1);
}

/// The seven oriented triples (abc) with e_a∘e_b = e_c.
inline constexpr std::array<std::array<int, 3>, 7> kStructureTriples = {
    {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}}};

inline Octonion oct_conj(const Octonion& x) {
  Octonion out = -x;
  out[0] = x[0];
  return out;
}

/// N(X) = scalar part of X∘conj(X) = sum of squared components.
inline Rational norm(const Octonion& x) {
  Rational n = 0;
  for (int a = 0; a < 8; ++a) n += x[a] * x[a];
  return n;
}

inline bool is_s7(const Octonion& x) { return circ(x, oct_conj(x)) == Octonion::scalar(1); }

inline Octonion oct_inverse(const Octonion& x) {
  const Rational n = norm(x);
  if (n.is_zero()) throw SingularError("zero octonion has no inverse");
  return (1 / n) * oct_conj(x);
}

namespace detail {
inline void require_s7(const Octonion& x, const char* name) {
  if (!is_s7(x)) throw NotOnS7Error(std::string(name) + " = '" + to_text(x) + "' is not a unit octonion");
}
}  // namespace detail

/// A∘_X B = (A∘X)∘(conj(X)∘B), X on S7.
inline Octonion x_product(const Octonion& x, const Octonion& a, const Octonion& b) {
  detail::require_s7(x, "X");
  return circ(circ(a, x), circ(oct_conj(x), b));
}

/// A∘_{X,Y} B = (A∘X)∘(conj(Y)∘B), X, Y on S7.
inline Octonion xy_product(const Octonion& x, const Octonion& y, const Octonion& a, const Octonion& b) {
  detail::require_s7(x, "X");
  detail::require_s7(y, "Y");
  return circ(circ(a, x), circ(oct_conj(y), b));
}

/// A∘_{1,X} B = A∘(conj(X)∘B); X is its two-sided unit.
inline Octonion one_x_product(const Octonion& x, const Octonion& a, const Octonion& b) {
  detail::require_s7(x, "X");
  return circ(a, circ(oct_conj(x), b));
}

}  // namespace octoclif
