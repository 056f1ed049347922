#pragma once

#include "octoclif/inverse.hpp"
#include "octoclif/octonion.hpp"

#include <cstdint>
#include <random>

namespace octoclif {

/// Seeded generator for the sampled checks. mt19937_64 has a fixed output
/// sequence, and the range reduction below is ours, so sample streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = gen_();
    while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

  /// Octonion with integer components in [lo, hi].
  Octonion octonion(int lo = -9, int hi = 9) {
    Octonion out;
    for (int a = 0; a < 8; ++a) out[a] = uniform(lo, hi);
    return out;
  }

  /// Exact unit octonion: an integer octonion whose norm is a perfect square,
  /// divided by the square root of that norm.
  Octonion s7_element(int bound = 3) {
    for (;;) {
      Octonion x = octonion(-bound, bound);
      Rational root;
      const Rational n = norm(x);
      if (n.is_zero() || !exact_sqrt(n, root)) continue;
      return (1 / root) * x;
    }
  }

  /// e_a with a random sign, a in [lo, hi] (0 is the unit).
  Octonion signed_unit(int lo = 0, int hi = 7) {
    const int a = uniform(lo, hi);
    return Octonion::unit(a, uniform(0, 1) == 0 ? 1 : -1);
  }

  BladeIndex blade(int min_grade = 0, int max_grade = kGenerators) {
    for (;;) {
      const BladeIndex b(static_cast<unsigned>(uniform(0, kBladeCount - 1)));
      if (b.grade() >= min_grade && b.grade() <= max_grade) return b;
    }
  }

  /// Sum of 1..max_terms random blades with integer coefficients in
  /// [-3, 3] \ {0}.
  Multivector multivector(int max_terms = 3, int min_grade = 0, int max_grade = kGenerators) {
    Multivector out;
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
      int c = uniform(1, 3) * (uniform(0, 1) == 0 ? 1 : -1);
      out += Multivector::blade(blade(min_grade, max_grade), c);
    }
    return out.is_zero() ? Multivector::scalar(1) : out;
  }

  /// Random invertible element that is not a scalar.
  Multivector invertible(int max_terms = 3) {
    for (;;) {
      Multivector u = multivector(max_terms, 1);
      if (!u.is_scalar() && try_inverse(u)) return u;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace octoclif
