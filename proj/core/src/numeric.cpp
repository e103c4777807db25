#include "mockq/numeric.hpp"

#include <cmath>
#include <vector>

#include "mockq/series.hpp"

namespace mockq {

cplx ipow(cplx z, std::int64_t n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  cplx result{1.0, 0.0};
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

cplx cpow(cplx z, cplx a) {
  if (a == cplx{}) return {1.0, 0.0};
  if (z == cplx{}) return {};
  if (a.imag() == 0.0 && a.real() == std::round(a.real()) && std::abs(a.real()) < 1e9)
    return ipow(z, static_cast<std::int64_t>(a.real()));
  // Positive reals stay on the real axis.
  if (z.imag() == 0.0 && z.real() > 0.0 && a.imag() == 0.0)
    return {std::pow(z.real(), a.real()), 0.0};
  return std::exp(a * std::log(z));
}

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double relative_gap(std::span<const cplx> terms) {
  cplx total{};
  double scale = 0.0;
  for (const cplx& t : terms) {
    total += t;
    scale += std::abs(t);
  }
  if (scale == 0.0) return 0.0;
  return std::abs(total) / scale;
}

double relative_gap(std::initializer_list<cplx> terms) {
  return relative_gap(std::span<const cplx>(terms.begin(), terms.size()));
}

namespace {

template <class T>
T tree_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return tree_sum(v.first(half)) + tree_sum(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return tree_sum(values); }
cplx pairwise_sum(std::span<const cplx> values) { return tree_sum(values); }

bool near_lattice(cplx z, cplx base, double guard) {
  if (z == cplx{}) return false;
  const double lb = std::log(std::abs(base));
  if (lb == 0.0 || !std::isfinite(lb)) return false;
  const double n0 = std::round(std::log(std::abs(z)) / lb);
  if (!std::isfinite(n0) || std::abs(n0) > 1e6) return false;
  for (int d = -1; d <= 1; ++d) {
    const auto n = static_cast<std::int64_t>(n0) + d;
    if (std::abs(1.0 - z * ipow(base, -n)) < guard) return true;
  }
  return false;
}

cplx PuiseuxSeries::evaluate(cplx x) const {
  const cplx var = point == ExpansionPoint::zero ? x : 1.0 / x;
  cplx acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * var + *it;
  return cpow(x, exponent) * acc;
}

}  // namespace mockq
