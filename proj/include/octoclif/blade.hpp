#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace octoclif {

inline constexpr int kGenerators = 7;
inline constexpr int kBladeCount = 1 << kGenerators;

/// Basis blade of Cl(0,7) named by a 7-bit mask: bit i-1 set means e_i is a
/// factor. Mask 0 is the scalar blade. Factors are ordered ascending.
class BladeIndex {
 public:
  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned mask) : mask_(static_cast<std::uint8_t>(mask)) {
    if (mask >= static_cast<unsigned>(kBladeCount)) throw std::out_of_range("blade mask out of range");
  }

  static constexpr BladeIndex scalar() { return BladeIndex{}; }
  /// Generator e_i, i in 1..7.
  static constexpr BladeIndex generator(int i) {
    if (i < 1 || i > kGenerators) throw std::out_of_range("generator index out of range");
    return BladeIndex(1u << (i - 1));
  }

  constexpr unsigned mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(static_cast<unsigned>(mask_)); }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }

  /// Generator indices in ascending order.
  std::vector<int> factors() const {
    std::vector<int> out;
    for (int i = 1; i <= kGenerators; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// `1` for the scalar blade, otherwise `e1^e2^e4`.
  std::string name() const {
    if (mask_ == 0) return "1";
    std::string out;
    for (int i : factors()) {
      if (!out.empty()) out += '^';
      out += 'e';
      out += static_cast<char>('0' + i);
    }
    return out;
  }

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
  /// Canonical text order: grade first, then mask.
  friend constexpr std::strong_ordering operator<=>(BladeIndex a, BladeIndex b) {
    if (auto c = a.grade() <=> b.grade(); c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint8_t mask_ = 0;
};

struct BladeProduct {
  int sign;
  BladeIndex blade;
};

/// Number of transpositions needed to bring the factor string a·b into
/// ascending order.
constexpr int reorder_swaps(unsigned a, unsigned b) {
  int swaps = 0;
  for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
  return swaps;
}

/// Product of two basis blades under e_i e_i = -1. Each shared generator
/// contracts to -1 after reordering.
constexpr BladeProduct blade_mul(BladeIndex a, BladeIndex b) {
  const int swaps = reorder_swaps(a.mask(), b.mask()) + std::popcount(a.mask() & b.mask());
  return {swaps % 2 == 0 ? 1 : -1, BladeIndex(a.mask() ^ b.mask())};
}

constexpr int reversion_sign(int grade) { return (grade / 2) % 2 == 0 ? 1 : -1; }
constexpr int involution_sign(int grade) { return grade % 2 == 0 ? 1 : -1; }
constexpr int conjugation_sign(int grade) { return reversion_sign(grade) * involution_sign(grade); }

}  // namespace octoclif
