#include "mockq/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mockq/errors.hpp"
#include "mockq/mock.hpp"
#include "mockq/qseries.hpp"

namespace mockq {

namespace {

std::int64_t tri(std::int64_t n) { return n * (n - 1) / 2; }

void require_plain(const PuiseuxSeries& s, const char* what) {
  if (!s.plain()) {
    std::ostringstream msg;
    msg << what << " acts on plain power series around 0 (no prefactor)";
    throw DomainError(msg.str());
  }
}

// x^m T^n on a plain series; the truncation order grows by m.
PuiseuxSeries multiply_shift(const PuiseuxSeries& s, int m, int n, cplx q) {
  PuiseuxSeries out;
  out.coeffs.assign(s.coeffs.size() + static_cast<std::size_t>(m), cplx{});
  for (std::size_t k = 0; k < s.coeffs.size(); ++k)
    out.coeffs[k + static_cast<std::size_t>(m)] =
        s.coeffs[k] * ipow(q, static_cast<std::int64_t>(n) * static_cast<std::int64_t>(k));
  return out;
}

}  // namespace

PuiseuxSeries borel(const PuiseuxSeries& series, BorelSign sign, const QContext& ctx) {
  require_plain(series, "q-Borel transform");
  const std::int64_t s = sign == BorelSign::plus ? 1 : -1;
  PuiseuxSeries out = series;
  for (std::size_t n = 0; n < out.coeffs.size(); ++n)
    out.coeffs[n] *= ipow(ctx.q(), s * tri(static_cast<std::int64_t>(n)));
  return out;
}

double commutation_discrepancy(int m, int n, const PuiseuxSeries& series, BorelSign sign,
                               const QContext& ctx) {
  require_plain(series, "commutation check");
  if (m < 0) throw DomainError("x^m needs m >= 0 on a power series");
  const cplx q = ctx.q();
  const int s = sign == BorelSign::plus ? 1 : -1;

  const PuiseuxSeries lhs = borel(multiply_shift(series, m, n, q), sign, ctx);
  PuiseuxSeries rhs = multiply_shift(borel(series, sign, ctx), m, n + s * m, q);
  const cplx factor = ipow(q, s * tri(m));
  for (cplx& c : rhs.coeffs) c *= factor;

  double worst = 0.0;
  for (std::size_t k = 0; k < lhs.coeffs.size(); ++k) {
    const double scale = std::max(std::abs(lhs.coeffs[k]), std::abs(rhs.coeffs[k]));
    if (scale == 0.0) continue;
    worst = std::max(worst, std::abs(lhs.coeffs[k] - rhs.coeffs[k]) / scale);
  }
  return worst;
}

double commutation_check(int m, int n, const PuiseuxSeries& series, const QContext& ctx) {
  return std::max(commutation_discrepancy(m, n, series, BorelSign::plus, ctx),
                  commutation_discrepancy(m, n, series, BorelSign::minus, ctx));
}

cplx laplace_plus(const ComplexFn& f, cplx x, cplx lambda, const QContext& ctx) {
  if (x == cplx{} || lambda == cplx{}) throw DomainError("L^+ needs x != 0 and lambda != 0");
  const cplx q = ctx.q();
  if (near_lattice(-lambda / x, q))
    throw PoleError("theta_q(lambda q^n / x) vanishes on the L^+ grid");
  auto term = [&](cplx node) {
    const cplx v = f(node) / theta(node / x, ctx);
    if (!is_finite(v)) throw PoleError("L^+ summand is not finite (pole of f on the grid)");
    return v;
  };
  const cplx center = term(lambda);
  detail::TailSum up(ctx);
  cplx node = lambda;
  do {
    node *= q;
  } while (up.add(term(node)));
  detail::TailSum down(ctx);
  node = lambda;
  const cplx qinv = 1.0 / q;
  do {
    node *= qinv;
  } while (down.add(term(node)));
  return center + up.value() + down.value();
}

namespace {

constexpr int kMaxContourNodes = 1 << 14;

// (1/N) sum_j F(r e^{2 pi i j/N}) with F(xi) = f(xi) theta(x/xi), doubling N.
cplx contour_average(const ComplexFn& f, cplx x, double radius, const QContext& ctx) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw DomainError("contour radius must be positive and finite");
  auto integrand = [&](int j, int n) {
    const double angle = 2.0 * std::numbers::pi * j / n;
    const cplx xi = std::polar(radius, angle);
    const cplx v = f(xi) * theta(x / xi, ctx);
    if (!is_finite(v)) throw PoleError("contour integrand is not finite (pole near the contour)");
    return v;
  };

  int n = ctx.contour_points();
  std::vector<cplx> values(static_cast<std::size_t>(n));
  std::vector<double> mags(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    values[static_cast<std::size_t>(j)] = integrand(j, n);
    mags[static_cast<std::size_t>(j)] = std::abs(values[static_cast<std::size_t>(j)]);
  }
  cplx sum = pairwise_sum(values);
  double mag_sum = pairwise_sum(mags);
  cplx estimate = sum / static_cast<double>(n);

  while (2 * n <= kMaxContourNodes) {
    const int n2 = 2 * n;
    std::vector<cplx> odd(static_cast<std::size_t>(n));
    std::vector<double> odd_mags(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      odd[static_cast<std::size_t>(j)] = integrand(2 * j + 1, n2);
      odd_mags[static_cast<std::size_t>(j)] = std::abs(odd[static_cast<std::size_t>(j)]);
    }
    sum += pairwise_sum(odd);
    mag_sum += pairwise_sum(odd_mags);
    const cplx refined = sum / static_cast<double>(n2);
    const double mean_mag = mag_sum / n2;
    const double delta = std::abs(refined - estimate);
    n = n2;
    estimate = refined;
    if (delta <= std::max(ctx.tol() * std::abs(refined), 1e-13 * mean_mag)) return estimate;
  }
  std::ostringstream msg;
  msg << "contour quadrature did not converge with " << kMaxContourNodes << " nodes";
  throw TruncationError(msg.str());
}

}  // namespace

cplx laplace_minus(const ComplexFn& f, cplx x, double radius, const QContext& ctx) {
  if (x == cplx{}) throw DomainError("L^- needs x != 0");
  return contour_average(f, x, radius, ctx);
}

cplx laplace_minus(const ComplexFn& f, cplx x, const QContext& ctx) {
  const double r = ctx.contour_radius() > 0.0 ? ctx.contour_radius() : 1.0;
  return laplace_minus(f, x, r, ctx);
}

// ---------------------------------------------------------------------------
// Formal solutions.

namespace {

struct OperatorScalars {
  cplx a1{1.0, 0.0};
  cplx b1{1.0, 0.0};
};

OperatorScalars leading_scalars(std::span<const cplx> alphas, std::span<const cplx> betas,
                                cplx q) {
  OperatorScalars s;
  for (const cplx& a : alphas) s.a1 *= -cpow(q, a);
  for (const cplx& b : betas) s.b1 *= -cpow(q, b);
  return s;
}

void require_exponents(std::span<const cplx> alphas, std::span<const cplx> betas) {
  if (alphas.size() != betas.size())
    throw DomainError("need equally many alpha and beta exponents");
  if (alphas.empty()) throw DomainError("need at least one exponent pair (m >= 2)");
}

}  // namespace

PuiseuxSeries formal_solution(ExpansionPoint point, int index, std::span<const cplx> alphas,
                              std::span<const cplx> betas, int order, const QContext& ctx) {
  require_exponents(alphas, betas);
  const int count = static_cast<int>(alphas.size());
  if (index < 0 || index >= count) throw DomainError("formal solution index out of range");
  const auto j = static_cast<std::size_t>(index);
  const cplx q = ctx.q();
  const int m = count + 1;

  std::vector<cplx> num;
  std::vector<cplx> den;
  cplx scale;
  cplx exponent;
  if (point == ExpansionPoint::zero) {
    for (const cplx& b : betas) num.push_back(cpow(q, alphas[j] - b));
    for (std::size_t k = 0; k < alphas.size(); ++k)
      if (k != j) den.push_back(cpow(q, alphas[j] - alphas[k] + 1.0));
    const auto s = leading_scalars(alphas, betas, q);
    scale = s.b1 / s.a1 * cpow(q, -alphas[j] - 1.0);
    exponent = alphas[j];
  } else {
    for (const cplx& a : alphas) num.push_back(cpow(q, a - betas[j]));
    for (std::size_t k = 0; k < betas.size(); ++k)
      if (k != j) den.push_back(cpow(q, betas[k] - betas[j] + 1.0));
    scale = cpow(q, static_cast<double>(m - 1) + betas[j]);
    exponent = betas[j];
  }
  num.emplace_back(0.0);

  PuiseuxSeries out;
  try {
    out = qhyper_coeffs(num, den, order, ctx);
  } catch (const PoleError& e) {
    throw ResonanceError(std::string("resonant exponents: ") + e.what());
  }
  cplx power{1.0, 0.0};
  for (cplx& c : out.coeffs) {
    c *= power;
    power *= scale;
  }
  out.point = point;
  out.exponent = exponent;
  return out;
}

namespace {

struct AppliedSeries {
  PuiseuxSeries series;
  std::vector<double> scale;
};

AppliedSeries apply_with_scale(const QDiffOperator& op, const PuiseuxSeries& s) {
  const cplx q = op.base();
  const int lo = op.min_x_degree();
  const int hi = op.max_x_degree();
  const auto order = static_cast<std::int64_t>(s.order());
  const bool at_zero = s.point == ExpansionPoint::zero;

  AppliedSeries out;
  out.series.point = s.point;
  out.series.exponent = s.exponent + static_cast<double>(at_zero ? lo : hi);
  out.series.coeffs.assign(s.coeffs.size(), cplx{});
  out.scale.assign(s.coeffs.size(), 0.0);

  for (const auto& [l, poly] : op.terms()) {
    const cplx eigen_base = cpow(q, s.exponent * static_cast<double>(l));
    for (const auto& [p, c] : poly.monomials()) {
      for (std::int64_t j = 0; j <= order; ++j) {
        // Around 0: x^p x^{e+n} = x^{e+lo+j}. Around inf: x^p x^{e-n} = x^{e+hi-j}.
        const std::int64_t n = at_zero ? j + lo - p : j - hi + p;
        if (n < 0 || n > order) continue;
        const std::int64_t signed_n = at_zero ? n : -n;
        const cplx v = c * eigen_base * ipow(q, l * signed_n) * s.coeffs[static_cast<std::size_t>(n)];
        out.series.coeffs[static_cast<std::size_t>(j)] += v;
        out.scale[static_cast<std::size_t>(j)] += std::abs(v);
      }
    }
  }
  return out;
}

}  // namespace

PuiseuxSeries apply_operator_to_series(const QDiffOperator& op, const PuiseuxSeries& s) {
  return apply_with_scale(op, s).series;
}

double formal_residual(const QDiffOperator& op, const PuiseuxSeries& s) {
  const auto applied = apply_with_scale(op, s);
  double worst = 0.0;
  for (std::size_t j = 0; j < applied.scale.size(); ++j) {
    if (applied.scale[j] == 0.0) continue;
    worst = std::max(worst, std::abs(applied.series.coeffs[j]) / applied.scale[j]);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Convergent solutions.

namespace {

constexpr double kRadiusGuard = 1e-6;

struct KernelShape {
  // Kernel = prod_k (num_k * xi^{sign})_inf / (den_k * xi^{sign})_inf, sign = +1 at 0, -1 at inf.
  std::vector<cplx> num;
  std::vector<cplx> den;
  cplx theta_scale;  // prefactor 1/theta(theta_scale * x)
  double pole_modulus;
};

KernelShape kernel_shape(ExpansionPoint point, std::span<const cplx> alphas,
                         std::span<const cplx> betas, const QContext& ctx,
                         InfinityKernel kernel) {
  require_exponents(alphas, betas);
  const cplx q = ctx.q();
  const int m = static_cast<int>(alphas.size()) + 1;
  KernelShape k;
  if (point == ExpansionPoint::zero) {
    const auto s = leading_scalars(alphas, betas, q);
    const cplx c = -s.b1 / s.a1;  // -a1^{-1} b1
    double nearest = INFINITY;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      k.num.push_back(c * cpow(q, 1.0 - alphas[i]));
      const cplx d = c * cpow(q, -betas[i]);
      k.den.push_back(d);
      nearest = std::min(nearest, 1.0 / std::abs(d));
    }
    k.theta_scale = c;
    k.pole_modulus = nearest;
  } else {
    const int shift = kernel == InfinityKernel::exact ? 0 : 1;
    double outermost = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      k.num.push_back(-cpow(q, static_cast<double>(m + shift) + betas[i]));
      const cplx d = -cpow(q, static_cast<double>(m - 1 + shift) + alphas[i]);
      k.den.push_back(d);
      outermost = std::max(outermost, std::abs(d));
    }
    k.theta_scale = -ipow(q, 1 - m - shift);
    k.pole_modulus = outermost;
  }
  return k;
}

double radius_for(ExpansionPoint point, const KernelShape& k, const QContext& ctx) {
  const double step = std::sqrt(std::abs(ctx.q()));
  const double user = ctx.contour_radius();
  if (point == ExpansionPoint::zero) {
    if (user > 0.0) {
      if (!(user < k.pole_modulus * (1.0 - kRadiusGuard)))
        throw PoleError("contour radius does not stay inside the kernel's nearest pole");
      return user;
    }
    return k.pole_modulus * step;
  }
  if (user > 0.0) {
    if (!(user > k.pole_modulus * (1.0 + kRadiusGuard)))
      throw PoleError("contour radius does not enclose the kernel's poles");
    return user;
  }
  if (k.pole_modulus == 0.0) return 1.0;
  return k.pole_modulus / step;
}

}  // namespace

double integral_contour_radius(ExpansionPoint point, std::span<const cplx> alphas,
                               std::span<const cplx> betas, const QContext& ctx,
                               InfinityKernel kernel) {
  return radius_for(point, kernel_shape(point, alphas, betas, ctx, kernel), ctx);
}

cplx integral_solution(ExpansionPoint point, std::span<const cplx> alphas,
                       std::span<const cplx> betas, cplx x, const QContext& ctx,
                       InfinityKernel kernel) {
  if (x == cplx{}) throw DomainError("integral solution needs x != 0");
  const KernelShape k = kernel_shape(point, alphas, betas, ctx, kernel);
  const double r = radius_for(point, k, ctx);
  const cplx theta_arg = k.theta_scale * x;
  if (near_lattice(-theta_arg, ctx.q()))
    throw PoleError("theta prefactor of the integral solution vanishes at x");

  const bool at_zero = point == ExpansionPoint::zero;
  const ComplexFn g = [&](cplx xi) {
    const cplx var = at_zero ? xi : 1.0 / xi;
    cplx v{1.0, 0.0};
    for (std::size_t i = 0; i < k.num.size(); ++i)
      v *= qpoch_inf(k.num[i] * var, ctx) / qpoch_inf(k.den[i] * var, ctx);
    return v;
  };
  return laplace_minus(g, x, r, ctx) / theta(theta_arg, ctx);
}

// ---------------------------------------------------------------------------
// Resummation.

PuiseuxSeries resummation_formal_series(cplx alpha, int order, const QContext& ctx) {
  const cplx q = ctx.q();
  const cplx num[] = {q, cplx{}};
  PuiseuxSeries s = qhyper_coeffs(num, {}, order, ctx);
  const cplx scale = cpow(q, -alpha - 1.0);
  cplx power{1.0, 0.0};
  for (cplx& c : s.coeffs) {
    c *= power;
    power *= scale;
  }
  return s;
}

ComplexFn geometric_closed_form(const PuiseuxSeries& series) {
  require_plain(series, "geometric closed form");
  if (series.coeffs.size() < 2 || series.coeffs[0] == cplx{})
    throw DomainError("need at least two coefficients and c0 != 0");
  const cplx c0 = series.coeffs[0];
  const cplx ratio = series.coeffs[1] / c0;
  for (std::size_t n = 1; n + 1 < series.coeffs.size(); ++n) {
    const cplx expected = series.coeffs[n] * ratio;
    const cplx actual = series.coeffs[n + 1];
    if (std::abs(actual - expected) > 1e-12 * (std::abs(actual) + std::abs(expected)))
      throw DomainError("series coefficients are not geometric");
  }
  return [c0, ratio](cplx xi) { return c0 / (1.0 - ratio * xi); };
}

cplx borel_laplace_resum(cplx alpha, cplx x, cplx lambda, const QContext& ctx) {
  constexpr int kOrder = 12;
  const PuiseuxSeries formal = resummation_formal_series(alpha, kOrder, ctx);
  const ComplexFn f = geometric_closed_form(borel(formal, BorelSign::plus, ctx));
  return cpow(x, alpha) * laplace_plus(f, x, -1.0 / lambda, ctx);
}

cplx borel_laplace_mu_form(cplx alpha, cplx x, cplx lambda, ResummationConstant constant,
                           const QContext& ctx) {
  const cplx q = ctx.q();
  const cplx qa = cpow(q, alpha);
  cplx value = kI * cpow(q, 0.125) * cpow(x, alpha - 0.5) / std::sqrt(lambda) *
               mu(x * lambda, lambda * qa, ctx);
  if (constant == ResummationConstant::exact) value *= std::sqrt(lambda * qa);
  return value;
}

}  // namespace mockq
