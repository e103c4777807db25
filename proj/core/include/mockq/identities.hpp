// Right-hand sides of the representation formulas for mu, A_m, G_m, g2, g3
// and the fundamental solutions of the associated q-difference equations.
// Each function returns the value its left-hand side is claimed to equal.
#pragma once

#include "mockq/context.hpp"

namespace mockq {

/// -i q^{1/8} theta(-y) / sqrt(y) * mu(x, y): the value of A_1(x, y).
cplx a1_from_mu(cplx x, cplx y, const QContext& ctx);

/// sum_{k<m} -i q^{m/8} x^k theta_{q^m}(-y q^k) / sqrt(y q^k) * mu(x^m, y q^k; q^m):
/// the value of A_m(x, (-1)^{m-1} y).
cplx appell_A_from_mu(int m, cplx x, cplx y, const QContext& ctx);

/// -i q^{m/8} sum_{k<m} theta_{q^m}(-y q^k) / sqrt(y q^k) x^{k-m/2} mu(x^m, y q^k; q^m):
/// the value of G_m(x, y).
cplx appell_G_from_mu(int m, cplx x, cplx y, const QContext& ctx);

/// sum_{k<m} x^k theta_{q^m}(-y q^k): the source term of the first-order
/// relation y G_m(xq, y) + x^m G_m(x, y) = -source.
cplx appell_G_shift_source(int m, cplx x, cplx y, const QContext& ctx);

/// Nome used by the y = 1 source term sum_{k=1}^{m-1} x^k theta(-q^k).
enum class ThetaNome { q, q_pow_m };
cplx appell_G1_shift_source(int m, cplx x, ThetaNome nome, const QContext& ctx);

/// -i q^{-1/4} mu(x^2, q; q^2) + (q^2;q^2)^4 / ((q;q)^2 theta_{q^2}(-x^2)): g2(x).
cplx g2_from_mu(cplx x, const QContext& ctx);

/// Nome of the first mu term in the g3 representation.
enum class G3Base { q_squared, q_cubed };

/// -i x^{-1/2} q^{-1/8} mu(x^3, q; base) - i x^{1/2} q^{-5/8} mu(x^3, q^2; q^3)
///   + (q^3;q^3)^3 / ((q;q) theta_{q^3}(-x^3)).
cplx g3_from_mu(cplx x, G3Base base, const QContext& ctx);

/// (q^m;q^m)^3 / theta_{q^m}(-x^m)
///   - sum_{j=1}^{m-1} i theta_{q^m}(-q^j) x^{j-m/2} q^{m/8-j/2} mu(x^m, q^j; q^m):
/// the value of G_m(x, 1).
cplx appell_G1_closed_form(int m, cplx x, const QContext& ctx);

/// The same value written in the lambda-shifted fundamental solutions:
/// -i q^{m/8} sum_{j=1}^{m-1} theta_{q^m}(-q^j) x^{j-m/2} q^{-j/2} mu(x^m lambda, lambda q^j; q^m)
///   + (q^m;q^m)^3/theta_{q^m}(-x^m) sum_{j<m} x^j theta(-lambda) theta(-x^m lambda q^j)
///                                     / (theta(-x^m lambda) theta(-lambda q^j)).
cplx appell_G1_lambda_form(int m, cplx x, cplx lambda, const QContext& ctx);

// ---------------------------------------------------------------------------
// Fundamental solutions.

/// 1 / theta_q(-x q^alpha).
cplx linear_eq_theta_solution(cplx x, cplx alpha, const QContext& ctx);

/// Power of x multiplying mu in the mu-type solutions of
/// prod_k (T - q^{alpha_k}) (T + x q^alpha) f = 0.
enum class MuSolutionPower {
  alpha_j,            ///< x^{alpha_j - 1/2}: annihilated.
  alpha_plus_alpha_j  ///< x^{alpha + alpha_j - 1/2}: annihilated only when alpha = 0.
};

/// x^{p} mu(x lambda q^alpha, lambda q^{alpha_j}; q).
cplx linear_eq_mu_solution(cplx x, cplx alpha, cplx alpha_j, cplx lambda,
                           MuSolutionPower power, const QContext& ctx);

/// 1 / theta_{q^m}(-x^m).
cplx gm1_theta_solution(int m, cplx x, const QContext& ctx);

/// x^{j-m/2} mu(x^m lambda, lambda q^j; q^m).
cplx gm1_mu_solution(int m, int j, cplx x, cplx lambda, const QContext& ctx);

}  // namespace mockq
