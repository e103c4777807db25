// Foundational q-series: q-shifted factorials, Jacobi theta and basic
// hypergeometric series.
//
// Every infinite sum and product stops by the same rule: three consecutive
// terms (or factors' deviation from 1) below tol * (1 + |partial|). Bilateral
// sums apply the rule to each tail. Non-integer powers use the principal
// branch, q^nu = exp(nu Log q).
#pragma once

#include <span>

#include "mockq/context.hpp"
#include "mockq/series.hpp"

namespace mockq {

/// (x;q)_n = prod_{j<n} (1 - x q^j).
cplx qpoch_finite(cplx x, int n, const QContext& ctx);

/// (x;q)_inf.
cplx qpoch_inf(cplx x, const QContext& ctx);

/// (x;q)_nu = (x;q)_inf / (q^nu x;q)_inf. Throws PoleError when the
/// denominator is below tol^2.
cplx qpoch_nu(cplx x, cplx nu, const QContext& ctx);

enum class ThetaMode { sum, product };

/// theta_q(x) = sum_n x^n q^{n(n-1)/2} = (q, -x, -q/x; q)_inf.
cplx theta(cplx x, const QContext& ctx, ThetaMode mode = ThetaMode::sum);

/// r phi s with the ((-1)^n q^{n(n-1)/2})^{s-r+1} balancing factor.
/// A zero entry among the numerators is the usual "0" parameter.
/// Numeric values exist for s-r+1 > 0, for r = s+1 with |z| < 1, and for
/// terminating series; anything else is DivergentSeriesError.
cplx qhyper(std::span<const cplx> numerators, std::span<const cplx> denominators, cplx z,
            const QContext& ctx);

/// Coefficients A_0..A_N of the same series in z (any r, s, including the
/// divergent regime), as a plain series around 0.
PuiseuxSeries qhyper_coeffs(std::span<const cplx> numerators,
                            std::span<const cplx> denominators, int order,
                            const QContext& ctx);

namespace detail {

/// Adaptive accumulation shared by all unilateral tails.
class TailSum {
 public:
  explicit TailSum(const QContext& ctx) : ctx_(ctx) {}

  /// Adds a term; returns false once the series may stop.
  bool add(cplx term);
  cplx value() const { return sum_; }
  int terms() const { return count_; }

 private:
  const QContext& ctx_;
  cplx sum_{};
  int count_ = 0;
  int small_run_ = 0;
  int stop_at_ = -1;
};

[[noreturn]] void throw_truncation(const char* what, const QContext& ctx);

}  // namespace detail

}  // namespace mockq
