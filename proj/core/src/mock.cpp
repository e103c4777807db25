#include "mockq/mock.hpp"

#include <cmath>
#include <sstream>

#include "mockq/errors.hpp"
#include "mockq/qseries.hpp"

namespace mockq {

namespace detail {

void require_off_lattice(cplx z, cplx base, const char* name) {
  if (z == cplx{}) {
    std::ostringstream msg;
    msg << name << " must be nonzero";
    throw PoleError(msg.str());
  }
  if (near_lattice(z, base)) {
    std::ostringstream msg;
    msg << name << " = " << z << " lies within the pole guard of the lattice " << base << "^Z";
    throw PoleError(msg.str());
  }
}

namespace {

cplx pole_checked(cplx x, cplx qn) {
  const cplx xqn = x * qn;
  const cplx d = 1.0 - xqn;
  if (std::abs(d) < kPoleGuard * std::max(1.0, std::abs(xqn)))
    throw PoleError("1 - x q^n vanishes within the pole guard");
  return d;
}

}  // namespace

cplx appell_sum(cplx x, cplx y, int level, int sign, const QContext& ctx) {
  if (y == cplx{}) throw DomainError("Appell-Lerch sum needs y != 0");
  const cplx q = ctx.q();
  const cplx big_q = ipow(q, level);
  const cplx sy = static_cast<double>(sign) * y;
  const cplx qinv = 1.0 / q;

  const cplx center = 1.0 / pole_checked(x, 1.0);

  // n >= 1: w_n = (sy)^n Q^{n(n+1)/2}.
  TailSum up(ctx);
  {
    cplx w{1.0, 0.0};
    cplx big_qn{1.0, 0.0};
    cplx qn{1.0, 0.0};
    bool more = true;
    while (more) {
      big_qn *= big_q;
      qn *= q;
      w *= sy * big_qn;
      more = up.add(w / pole_checked(x, qn));
    }
  }
  // n = -k <= -1: w_{-k} = (sy)^{-k} Q^{k(k-1)/2}.
  TailSum down(ctx);
  {
    cplx w{1.0, 0.0};
    cplx big_qk{1.0, 0.0};  // Q^{k-1}
    cplx qnk{1.0, 0.0};     // q^{-k}
    bool more = true;
    while (more) {
      w *= big_qk / sy;
      big_qk *= big_q;
      qnk *= qinv;
      more = down.add(w / pole_checked(x, qnk));
    }
  }
  const cplx total = center + up.value() + down.value();
  if (!is_finite(total)) throw TruncationError("Appell-Lerch sum overflowed");
  return total;
}

}  // namespace detail

cplx mu(const MuArgs& args, const QContext& ctx) {
  const QContext local = args.base == ctx.q() ? ctx : ctx.with_nome(args.base);
  detail::require_off_lattice(args.x, args.base, "mu argument x");
  detail::require_off_lattice(args.y, args.base, "mu argument y");
  const cplx th = theta(-args.y, local);
  const cplx sum = detail::appell_sum(args.x, args.y, 1, -1, local);
  return kI * cpow(args.base, -0.125) * std::sqrt(args.x * args.y) / th * sum;
}

cplx mu(cplx x, cplx y, const QContext& ctx) { return mu(MuArgs{x, y, ctx.q()}, ctx); }

cplx mu_shift_rhs(const MuArgs& args, const QContext& ctx) {
  const cplx b = args.base;
  const cplx ratio = args.x / args.y;
  return -ratio * cpow(b, 0.5) * mu(args, ctx) - kI * std::sqrt(ratio) * cpow(b, 0.375);
}

cplx mu_translation_rhs(cplx x, cplx y, cplx z, const QContext& ctx) {
  const cplx q = ctx.q();
  const cplx base_value = mu(x, y, ctx);
  if (z == cplx{}) throw DomainError("translation parameter z must be nonzero");
  for (cplx w : {x, y, x * z, y * z})
    detail::require_off_lattice(w, q, "translation theta argument");
  const cplx den = theta(-x, ctx) * theta(-y, ctx) * theta(-x * z, ctx) * theta(-y * z, ctx);
  const cplx poch = qpoch_inf(q, ctx);
  const cplx correction = std::sqrt(x * y) * poch * poch * poch * theta(-z, ctx) *
                          theta(-x * y * z, ctx) / den;
  return base_value - kI * cpow(q, -0.125) * correction;
}

cplx appell_A(int m, cplx x, cplx y, const QContext& ctx) {
  if (m < 1) throw DomainError("Appell level m must be positive");
  detail::require_off_lattice(x, ctx.q(), "Appell argument x");
  const int sign = (m % 2 == 0) ? 1 : -1;
  return cpow(x, 0.5 * m) * detail::appell_sum(x, y, m, sign, ctx);
}

cplx appell_G(int m, cplx x, cplx y, const QContext& ctx) {
  if (m < 1) throw DomainError("Appell level m must be positive");
  detail::require_off_lattice(x, ctx.q(), "Appell argument x");
  return detail::appell_sum(x, y, m, -1, ctx);
}

namespace {

// Shared driver: t_0 = 1/((1-x)(1-q/x)), t_{n+1} = t_n * numer(n) / ((1-x q^{n+1})(1-q^{n+2}/x)).
template <class Numer>
cplx universal_series(cplx x, const QContext& ctx, Numer numer) {
  const cplx q = ctx.q();
  detail::require_off_lattice(x, q, "mock theta argument x");
  const cplx xinv = 1.0 / x;
  cplx term = 1.0 / ((1.0 - x) * (1.0 - q * xinv));
  detail::TailSum sum(ctx);
  cplx qn1 = q;  // q^{n+1}
  int n = 0;
  while (sum.add(term)) {
    const cplx d = (1.0 - x * qn1) * (1.0 - qn1 * q * xinv);
    if (std::abs(d) < kPoleGuard) throw PoleError("mock theta denominator vanishes");
    term *= numer(qn1) / d;
    qn1 *= q;
    ++n;
  }
  return sum.value();
}

}  // namespace

cplx g2_series(cplx x, const QContext& ctx) {
  return universal_series(x, ctx, [](cplx qn1) { return (1.0 + qn1) * qn1; });
}

cplx g3_series(cplx x, const QContext& ctx) {
  return universal_series(x, ctx, [](cplx qn1) { return qn1 * qn1; });
}

cplx g2_lerch(cplx x, const QContext& ctx) {
  const cplx q = ctx.q();
  return qpoch_inf(-q, ctx) / qpoch_inf(q, ctx) * appell_G(2, x, 1.0, ctx);
}

cplx g3_lerch(cplx x, const QContext& ctx) {
  return appell_G(3, x, 1.0, ctx) / qpoch_inf(ctx.q(), ctx);
}

}  // namespace mockq
