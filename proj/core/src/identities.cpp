#include "mockq/identities.hpp"

#include "mockq/errors.hpp"
#include "mockq/mock.hpp"
#include "mockq/qseries.hpp"

namespace mockq {

namespace {

void require_level(int m) {
  if (m < 1) throw DomainError("level m must be positive");
}

}  // namespace

cplx a1_from_mu(cplx x, cplx y, const QContext& ctx) {
  const cplx q = ctx.q();
  return -kI * cpow(q, 0.125) * theta(-y, ctx) / std::sqrt(y) * mu(x, y, ctx);
}

cplx appell_A_from_mu(int m, cplx x, cplx y, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const cplx big_q = ipow(q, m);
  const QContext level = ctx.with_nome(big_q);
  const cplx xm = ipow(x, m);
  cplx sum{};
  for (int k = 0; k < m; ++k) {
    const cplx yk = y * ipow(q, k);
    sum += ipow(x, k) * theta(-yk, level) / std::sqrt(yk) * mu(MuArgs{xm, yk, big_q}, ctx);
  }
  return -kI * cpow(q, m / 8.0) * sum;
}

cplx appell_G_from_mu(int m, cplx x, cplx y, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const cplx big_q = ipow(q, m);
  const QContext level = ctx.with_nome(big_q);
  const cplx xm = ipow(x, m);
  cplx sum{};
  for (int k = 0; k < m; ++k) {
    const cplx yk = y * ipow(q, k);
    sum += theta(-yk, level) / std::sqrt(yk) * cpow(x, k - 0.5 * m) *
           mu(MuArgs{xm, yk, big_q}, ctx);
  }
  return -kI * cpow(q, m / 8.0) * sum;
}

cplx appell_G_shift_source(int m, cplx x, cplx y, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const QContext level = ctx.with_nome(ipow(q, m));
  cplx sum{};
  for (int k = 0; k < m; ++k) sum += ipow(x, k) * theta(-y * ipow(q, k), level);
  return sum;
}

cplx appell_G1_shift_source(int m, cplx x, ThetaNome nome, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const QContext level = nome == ThetaNome::q ? ctx : ctx.with_nome(ipow(q, m));
  cplx sum{};
  for (int k = 1; k < m; ++k) sum += ipow(x, k) * theta(-ipow(q, k), level);
  return sum;
}

cplx g2_from_mu(cplx x, const QContext& ctx) {
  const cplx q = ctx.q();
  const cplx q2 = q * q;
  const QContext c2 = ctx.with_nome(q2);
  const cplx p2 = qpoch_inf(q2, c2);
  const cplx p1 = qpoch_inf(q, ctx);
  return -kI * cpow(q, -0.25) * mu(MuArgs{x * x, q, q2}, ctx) +
         p2 * p2 * p2 * p2 / (p1 * p1 * theta(-x * x, c2));
}

cplx g3_from_mu(cplx x, G3Base base, const QContext& ctx) {
  const cplx q = ctx.q();
  const cplx q2 = q * q;
  const cplx q3 = q2 * q;
  const QContext c3 = ctx.with_nome(q3);
  const cplx x3 = x * x * x;
  const cplx first_base = base == G3Base::q_squared ? q2 : q3;
  const cplx p3 = qpoch_inf(q3, c3);
  return -kI * cpow(x, -0.5) * cpow(q, -0.125) * mu(MuArgs{x3, q, first_base}, ctx) -
         kI * cpow(x, 0.5) * cpow(q, -0.625) * mu(MuArgs{x3, q2, q3}, ctx) +
         p3 * p3 * p3 / (qpoch_inf(q, ctx) * theta(-x3, c3));
}

cplx appell_G1_closed_form(int m, cplx x, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const cplx big_q = ipow(q, m);
  const QContext level = ctx.with_nome(big_q);
  const cplx xm = ipow(x, m);
  const cplx p = qpoch_inf(big_q, level);
  cplx value = p * p * p / theta(-xm, level);
  for (int j = 1; j < m; ++j) {
    const cplx qj = ipow(q, j);
    value -= kI * theta(-qj, level) * cpow(x, j - 0.5 * m) * cpow(q, m / 8.0 - j / 2.0) *
             mu(MuArgs{xm, qj, big_q}, ctx);
  }
  return value;
}

cplx appell_G1_lambda_form(int m, cplx x, cplx lambda, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const cplx big_q = ipow(q, m);
  const QContext level = ctx.with_nome(big_q);
  const cplx xm = ipow(x, m);
  cplx mu_part{};
  for (int j = 1; j < m; ++j) {
    const cplx qj = ipow(q, j);
    mu_part += theta(-qj, level) * cpow(x, j - 0.5 * m) * cpow(q, -j / 2.0) *
               mu(MuArgs{xm * lambda, lambda * qj, big_q}, ctx);
  }
  mu_part *= -kI * cpow(q, m / 8.0);

  const cplx th_lambda = theta(-lambda, level);
  const cplx th_xl = theta(-xm * lambda, level);
  cplx theta_part{};
  for (int j = 0; j < m; ++j) {
    const cplx qj = ipow(q, j);
    theta_part += ipow(x, j) * th_lambda * theta(-xm * lambda * qj, level) /
                  (th_xl * theta(-lambda * qj, level));
  }
  const cplx p = qpoch_inf(big_q, level);
  return mu_part + p * p * p / theta(-xm, level) * theta_part;
}

cplx linear_eq_theta_solution(cplx x, cplx alpha, const QContext& ctx) {
  const cplx arg = x * cpow(ctx.q(), alpha);
  if (near_lattice(arg, ctx.q())) throw PoleError("theta_q(-x q^alpha) vanishes");
  return 1.0 / theta(-arg, ctx);
}

cplx linear_eq_mu_solution(cplx x, cplx alpha, cplx alpha_j, cplx lambda,
                           MuSolutionPower power, const QContext& ctx) {
  const cplx q = ctx.q();
  const cplx exponent =
      power == MuSolutionPower::alpha_j ? alpha_j - 0.5 : alpha + alpha_j - 0.5;
  return cpow(x, exponent) * mu(x * lambda * cpow(q, alpha), lambda * cpow(q, alpha_j), ctx);
}

cplx gm1_theta_solution(int m, cplx x, const QContext& ctx) {
  require_level(m);
  const cplx big_q = ipow(ctx.q(), m);
  const cplx xm = ipow(x, m);
  if (near_lattice(xm, big_q)) throw PoleError("theta_{q^m}(-x^m) vanishes");
  return 1.0 / theta(-xm, ctx.with_nome(big_q));
}

cplx gm1_mu_solution(int m, int j, cplx x, cplx lambda, const QContext& ctx) {
  require_level(m);
  const cplx q = ctx.q();
  const cplx big_q = ipow(q, m);
  return cpow(x, j - 0.5 * m) *
         mu(MuArgs{ipow(x, m) * lambda, lambda * ipow(q, j), big_q}, ctx);
}

}  // namespace mockq
