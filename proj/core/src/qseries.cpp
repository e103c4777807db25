#include "mockq/qseries.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "mockq/errors.hpp"

namespace mockq {

namespace detail {

bool TailSum::add(cplx term) {
  sum_ += term;
  ++count_;
  if (stop_at_ >= 0) return count_ < stop_at_;
  if (count_ >= ctx_.max_terms()) throw_truncation("adaptive series", ctx_);
  if (std::abs(term) < ctx_.tol() * (1.0 + std::abs(sum_))) {
    if (++small_run_ == 3) {
      stop_at_ = count_ * ctx_.truncation_scale();
      return count_ < stop_at_;
    }
  } else {
    small_run_ = 0;
  }
  return true;
}

void throw_truncation(const char* what, const QContext& ctx) {
  std::ostringstream msg;
  msg << what << " did not converge within max_terms = " << ctx.max_terms();
  throw TruncationError(msg.str());
}

}  // namespace detail

cplx qpoch_finite(cplx x, int n, const QContext& ctx) {
  cplx prod{1.0, 0.0};
  cplx qj{1.0, 0.0};
  for (int j = 0; j < n; ++j) {
    prod *= 1.0 - x * qj;
    qj *= ctx.q();
  }
  return prod;
}

cplx qpoch_inf(cplx x, const QContext& ctx) {
  if (x == cplx{}) return {1.0, 0.0};
  cplx prod{1.0, 0.0};
  cplx xqj = x;
  int small_run = 0;
  int stop_at = -1;
  for (int j = 0;; ++j) {
    if (stop_at >= 0 && j >= stop_at) break;
    if (j >= ctx.max_terms()) detail::throw_truncation("q-Pochhammer product", ctx);
    prod *= 1.0 - xqj;
    if (stop_at < 0) {
      if (std::abs(xqj) < ctx.tol()) {
        if (++small_run == 3) stop_at = (j + 1) * ctx.truncation_scale();
      } else {
        small_run = 0;
      }
    }
    xqj *= ctx.q();
  }
  return prod;
}

cplx qpoch_nu(cplx x, cplx nu, const QContext& ctx) {
  const cplx num = qpoch_inf(x, ctx);
  const cplx den = qpoch_inf(cpow(ctx.q(), nu) * x, ctx);
  if (std::abs(den) < ctx.tol() * ctx.tol())
    throw PoleError("(q^nu x; q)_inf vanishes in (x;q)_nu");
  return num / den;
}

namespace {

// Pairs n >= 1 with 1 - n: both carry q^{n(n-1)/2}, so
// theta(x) = sum_{n>=1} q^{n(n-1)/2} (x^n + x^{1-n}).
cplx theta_sum(cplx x, const QContext& ctx) {
  const cplx q = ctx.q();
  cplx up = x;             // x^n q^{n(n-1)/2}
  cplx down{1.0, 0.0};     // x^{1-n} q^{n(n-1)/2}
  cplx qn = q;             // q^n
  const cplx xinv = 1.0 / x;
  cplx sum{};
  int small_run = 0;
  int stop_at = -1;
  for (int n = 1;; ++n) {
    if (stop_at >= 0 && n > stop_at) break;
    if (n > ctx.max_terms()) detail::throw_truncation("theta series", ctx);
    const cplx pair = up + down;
    sum += pair;
    if (stop_at < 0) {
      const double bound = ctx.tol() * (1.0 + std::abs(sum));
      if (std::abs(up) < bound && std::abs(down) < bound) {
        if (++small_run == 3) stop_at = n * ctx.truncation_scale();
      } else {
        small_run = 0;
      }
    }
    up *= x * qn;
    down *= qn * xinv;
    qn *= q;
  }
  return sum;
}

}  // namespace

cplx theta(cplx x, const QContext& ctx, ThetaMode mode) {
  if (x == cplx{}) throw DomainError("theta_q(x) is undefined at x = 0");
  if (mode == ThetaMode::product) {
    const cplx q = ctx.q();
    return qpoch_inf(q, ctx) * qpoch_inf(-x, ctx) * qpoch_inf(-q / x, ctx);
  }
  return theta_sum(x, ctx);
}

namespace {

// Ratio t_{n+1}/t_n of the r phi s term sequence without the z factor.
cplx term_ratio(std::span<const cplx> num, std::span<const cplx> den, int n, cplx qn,
                cplx qn1, int balance) {
  cplx r{1.0, 0.0};
  for (const cplx& a : num) r *= 1.0 - a * qn;
  for (const cplx& b : den) {
    const cplx d = 1.0 - b * qn;
    if (std::abs(d) < kPoleGuard * std::max(1.0, std::abs(b * qn))) {
      std::ostringstream msg;
      msg << "denominator parameter hits q^{-" << n << "} in basic hypergeometric series";
      throw PoleError(msg.str());
    }
    r /= d;
  }
  r /= 1.0 - qn1;
  if (balance != 0) r *= ipow(-qn, balance);
  return r;
}

// Smallest n >= 0 with a q^n = 1 for some numerator a, or -1.
int termination_index(std::span<const cplx> num, const QContext& ctx) {
  int best = -1;
  for (const cplx& a : num) {
    if (a == cplx{}) continue;
    cplx qn{1.0, 0.0};
    for (int n = 0; n < ctx.max_terms(); ++n) {
      if (std::abs(1.0 - a * qn) < 1e-12) {
        if (best < 0 || n < best) best = n;
        break;
      }
      if (std::abs(a * qn) < 1e-3) break;
      qn *= ctx.q();
    }
  }
  return best;
}

}  // namespace

cplx qhyper(std::span<const cplx> numerators, std::span<const cplx> denominators, cplx z,
            const QContext& ctx) {
  const int r = static_cast<int>(numerators.size());
  const int s = static_cast<int>(denominators.size());
  const int balance = s - r + 1;
  const int stop = termination_index(numerators, ctx);
  if (stop < 0) {
    if (balance < 0)
      throw DivergentSeriesError("r phi s with s - r + 1 < 0 has only a formal expansion");
    if (balance == 0 && !(std::abs(z) < 1.0))
      throw DivergentSeriesError("r phi s with r = s + 1 needs |z| < 1");
  }
  const cplx q = ctx.q();
  cplx term{1.0, 0.0};
  cplx qn{1.0, 0.0};
  detail::TailSum tail(ctx);
  int n = 0;
  while (true) {
    const bool more = tail.add(term);
    if (stop >= 0 && n == stop) break;
    if (!more) break;
    const cplx qn1 = qn * q;
    term *= term_ratio(numerators, denominators, n, qn, qn1, balance) * z;
    qn = qn1;
    ++n;
  }
  const cplx v = tail.value();
  if (!is_finite(v)) throw DivergentSeriesError("basic hypergeometric series overflowed");
  return v;
}

PuiseuxSeries qhyper_coeffs(std::span<const cplx> numerators,
                            std::span<const cplx> denominators, int order,
                            const QContext& ctx) {
  if (order < 0) throw DomainError("truncation order must be non-negative");
  const int balance = static_cast<int>(denominators.size()) -
                      static_cast<int>(numerators.size()) + 1;
  PuiseuxSeries out;
  out.coeffs.assign(static_cast<std::size_t>(order) + 1, cplx{});
  const cplx q = ctx.q();
  cplx term{1.0, 0.0};
  cplx qn{1.0, 0.0};
  for (int n = 0; n <= order; ++n) {
    out.coeffs[static_cast<std::size_t>(n)] = term;
    const cplx qn1 = qn * q;
    if (n < order) term *= term_ratio(numerators, denominators, n, qn, qn1, balance);
    qn = qn1;
  }
  return out;
}

}  // namespace mockq
