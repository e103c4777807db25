// q-Borel and q-Laplace transforms, formal and convergent solutions of
//   [T prod_k (T - q^{alpha_k}) + x prod_k (T - q^{beta_k})] f = 0,
// and the Borel-Laplace resummation that produces the mu-function.
//
// L^- carries the 1/(2 pi i) normalization:
//   L^-(f)(x) = (1/2 pi i) \oint_{|xi|=r} f(xi) theta_q(x/xi) dxi/xi,
// evaluated with the periodic trapezoid rule. Nodes double from
// ctx.contour_points until successive values agree, capped at 2^14.
#pragma once

#include <span>

#include "mockq/context.hpp"
#include "mockq/qdiff.hpp"
#include "mockq/series.hpp"

namespace mockq {

enum class BorelSign { plus, minus };

/// B^{+-}: A_n -> A_n q^{+-n(n-1)/2}. Needs a plain series around 0.
PuiseuxSeries borel(const PuiseuxSeries& series, BorelSign sign, const QContext& ctx);

/// Max relative coefficient-wise gap between B(x^m T^n f) and
/// q^{+-m(m-1)/2} xi^m T^{n+-m} B(f), both sides built independently.
double commutation_discrepancy(int m, int n, const PuiseuxSeries& series, BorelSign sign,
                               const QContext& ctx);
/// Worst of both signs.
double commutation_check(int m, int n, const PuiseuxSeries& series, const QContext& ctx);

/// L^+(f)(x, lambda) = sum_n f(lambda q^n) / theta_q(lambda q^n / x).
cplx laplace_plus(const ComplexFn& f, cplx x, cplx lambda, const QContext& ctx);

/// L^- on the circle of radius ctx.contour_radius() (1 when unset).
cplx laplace_minus(const ComplexFn& f, cplx x, const QContext& ctx);
cplx laplace_minus(const ComplexFn& f, cplx x, double radius, const QContext& ctx);

/// Formal solution number `index` (0-based, index < m-1) around 0 or infinity:
///   0:   x^{alpha_j} m phi m-2 (q^{alpha_j-beta_k}..., 0; q^{alpha_j-alpha_k+1} (k != j); b1/a1 x q^{-alpha_j-1})
///   inf: x^{beta_j}  m phi m-2 (q^{alpha_k-beta_j}..., 0; q^{beta_k-beta_j+1} (k != j); q^{m-1+beta_j}/x)
/// with a1 = prod(-q^{alpha_k}), b1 = prod(-q^{beta_k}). Throws ResonanceError when a
/// denominator parameter lands on q^{-n}.
PuiseuxSeries formal_solution(ExpansionPoint point, int index, std::span<const cplx> alphas,
                              std::span<const cplx> betas, int order, const QContext& ctx);

/// The operator applied term by term. Around 0 the result is
/// x^{e + min_deg} sum_j r_j x^j, around infinity x^{e + max_deg} sum_j r_j x^{-j};
/// j runs over 0..N, which are exactly the coefficients the truncation determines.
PuiseuxSeries apply_operator_to_series(const QDiffOperator& op, const PuiseuxSeries& s);

/// Max over result coefficients of |r_j| / sum |contributions to r_j|.
double formal_residual(const QDiffOperator& op, const PuiseuxSeries& s);

/// Kernel used for the convergent solution around infinity.
enum class InfinityKernel {
  /// 1/theta(-x q^{1-m}) \oint prod (-q^{m+beta_k}/xi)_inf / (-q^{m-1+alpha_k}/xi)_inf ...
  exact,
  /// 1/theta(-x q^{-m}) \oint prod (-q^{m+beta_k+1}/xi)_inf / (-q^{m+alpha_k}/xi)_inf ...
  /// This is the exact solution evaluated at x/q.
  shifted,
};

/// Admissible radius for the contour of integral_solution: inside the nearest
/// kernel pole around 0, outside the outermost one around infinity. The
/// default is the geometric mean of the nearest pole modulus and its q-image
/// toward the expansion point; a caller-supplied ctx.contour_radius is
/// validated instead.
double integral_contour_radius(ExpansionPoint point, std::span<const cplx> alphas,
                               std::span<const cplx> betas, const QContext& ctx,
                               InfinityKernel kernel = InfinityKernel::exact);

/// Convergent solution around 0:
///   1/theta(-a1^{-1} b1 x) L^-( prod (-a1^{-1} b1 xi q^{1-alpha_k})_inf / (-a1^{-1} b1 xi q^{-beta_k})_inf )
/// or around infinity per `kernel`.
cplx integral_solution(ExpansionPoint point, std::span<const cplx> alphas,
                       std::span<const cplx> betas, cplx x, const QContext& ctx,
                       InfinityKernel kernel = InfinityKernel::exact);

// ---------------------------------------------------------------------------
// Resummation of the divergent series 2phi0(q, 0; -; q; x q^{-alpha-1}).

/// Coefficients of 2phi0(q, 0; -; q; x q^{-alpha-1}) in x, up to `order`.
PuiseuxSeries resummation_formal_series(cplx alpha, int order, const QContext& ctx);

/// Closed form c0 / (1 - r xi) of a series whose coefficients are geometric.
/// Throws DomainError when they are not.
ComplexFn geometric_closed_form(const PuiseuxSeries& series);

/// x^alpha L^+(B^+(2phi0))(x, -1/lambda).
cplx borel_laplace_resum(cplx alpha, cplx x, cplx lambda, const QContext& ctx);

enum class ResummationConstant {
  /// i q^{1/8} x^{alpha-1/2} lambda^{-1/2} mu(x lambda, lambda q^alpha)
  unit,
  /// the same times sqrt(lambda q^alpha), which is what the sum equals
  exact,
};
cplx borel_laplace_mu_form(cplx alpha, cplx x, cplx lambda, ResummationConstant constant,
                           const QContext& ctx);

}  // namespace mockq
