// Zwegers' mu-function, higher level Appell functions and the universal
// mock theta functions g2, g3.
//
// Half-integer powers take the principal branch of the full argument:
// sqrt(xy) is sqrt of the product, x^{m/2} is exp((m/2) Log x). On positive
// reals every radicand is positive and the branch question does not arise.
#pragma once

#include "mockq/context.hpp"

namespace mockq {

/// Arguments of mu(x, y; base). x and y must stay off base^Z.
struct MuArgs {
  cplx x;
  cplx y;
  cplx base;
};

/// mu(x,y;q) = i q^{-1/8} sqrt(xy)/theta_q(-y) sum_n (-1)^n y^n q^{n(n+1)/2}/(1 - x q^n),
/// evaluated with q = args.base.
cplx mu(const MuArgs& args, const QContext& ctx);
/// mu with base ctx.q().
cplx mu(cplx x, cplx y, const QContext& ctx);

/// -(x/y) q^{1/2} mu(x,y) - i sqrt(x/y) q^{3/8}: the value of mu(xq, y).
cplx mu_shift_rhs(const MuArgs& args, const QContext& ctx);

/// mu(x,y) - i q^{-1/8} sqrt(xy) (q)_inf^3 theta(-z) theta(-xyz) /
/// [theta(-x) theta(-y) theta(-xz) theta(-yz)]: the value of mu(xz, yz).
/// Base is ctx.q().
cplx mu_translation_rhs(cplx x, cplx y, cplx z, const QContext& ctx);

/// A_m(x,y) = x^{m/2} sum_n (-1)^{mn} y^n q^{mn(n+1)/2} / (1 - x q^n).
cplx appell_A(int m, cplx x, cplx y, const QContext& ctx);

/// G_m(x,y) = x^{-m/2} A_m(x, (-1)^{m-1} y), summed directly as
/// sum_n (-1)^n y^n q^{mn(n+1)/2} / (1 - x q^n).
cplx appell_G(int m, cplx x, cplx y, const QContext& ctx);

/// Universal mock theta functions, q-series forms.
cplx g2_series(cplx x, const QContext& ctx);
cplx g3_series(cplx x, const QContext& ctx);

/// Appell-Lerch forms: (-q)_inf/(q)_inf G_2(x,1) and G_3(x,1)/(q)_inf.
cplx g2_lerch(cplx x, const QContext& ctx);
cplx g3_lerch(cplx x, const QContext& ctx);

namespace detail {

/// sum_n (sign*y)^n Q^{n(n+1)/2} / (1 - x q^n) with Q = q^level.
cplx appell_sum(cplx x, cplx y, int level, int sign, const QContext& ctx);

void require_off_lattice(cplx z, cplx base, const char* name);

}  // namespace detail

}  // namespace mockq
