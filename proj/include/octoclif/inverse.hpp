#pragma once

#include "octoclif/errors.hpp"
#include "octoclif/multivector.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace octoclif {

namespace detail {

/// Solves M y = rhs exactly by Gauss-Jordan elimination. Zero entries are
/// skipped, which makes monomial systems (blades) linear-time per row.
/// Returns nullopt when the system has no unique solution.
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m,
                                                        std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);

    const Rational inv = 1 / m[col][col];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = col; j < n; ++j)
      if (!m[col][j].is_zero()) {
        m[col][j] *= inv;
        nonzero.push_back(j);
      }
    rhs[col] *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j : nonzero) m[r][j] -= f * m[col][j];
      if (!rhs[col].is_zero()) rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace detail

/// Two-sided inverse in Cl(0,7), found by solving x·y = 1 over the full
/// 128-dimensional left-multiplication matrix of x and then checking y·x = 1.
inline Multivector inverse(const Multivector& x) {
  if (x.is_zero()) throw SingularError("zero has no inverse");
  if (x.is_scalar()) return Multivector::scalar(1 / x.scalar_part());

  // Column j holds x·e_J.
  std::vector<std::vector<Rational>> m(kBladeCount, std::vector<Rational>(kBladeCount));
  for (unsigned j = 0; j < static_cast<unsigned>(kBladeCount); ++j) {
    for (const auto& t : x.terms()) {
      const auto [sign, c] = blade_mul(t.blade, BladeIndex(j));
      if (sign > 0)
        m[c.mask()][j] += t.coeff;
      else
        m[c.mask()][j] -= t.coeff;
    }
  }
  std::vector<Rational> rhs(kBladeCount);
  rhs[0] = 1;
  auto y = detail::solve_exact(std::move(m), std::move(rhs));
  if (!y) throw SingularError("'" + to_text(x) + "' is not invertible in Cl(0,7)");

  std::vector<Term> terms;
  for (unsigned j = 0; j < static_cast<unsigned>(kBladeCount); ++j)
    if (!(*y)[j].is_zero()) terms.push_back({BladeIndex(j), (*y)[j]});
  Multivector result = Multivector::from_terms(terms);
  if (gp(result, x) != Multivector::scalar(1))
    throw OneSidedOnlyError("right inverse of '" + to_text(x) + "' is not a left inverse");
  return result;
}

/// Non-throwing form for scans.
inline std::optional<Multivector> try_inverse(const Multivector& x) {
  try {
    return inverse(x);
  } catch (const SingularError&) {
    return std::nullopt;
  }
}

}  // namespace octoclif
