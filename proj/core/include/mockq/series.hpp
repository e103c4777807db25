#pragma once

#include <cstddef>
#include <vector>

#include "mockq/numeric.hpp"

namespace mockq {

enum class ExpansionPoint { zero, infinity };

/// Truncated series x^e * sum_{n<=N} c_n x^n (point = zero) or
/// x^e * sum_{n<=N} c_n x^{-n} (point = infinity). The truncation order N is
/// coeffs.size() - 1 and is part of the value even when trailing
/// coefficients are zero.
struct PuiseuxSeries {
  ExpansionPoint point = ExpansionPoint::zero;
  cplx exponent{0.0, 0.0};
  std::vector<cplx> coeffs{cplx{1.0, 0.0}};

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool plain() const { return point == ExpansionPoint::zero && exponent == cplx{}; }

  /// Partial sum at x (principal branch for the prefactor).
  cplx evaluate(cplx x) const;
};

}  // namespace mockq
