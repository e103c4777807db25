#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace mockq {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Relative modulus below which a denominator counts as a pole.
inline constexpr double kPoleGuard = 1e-6;

/// z^n by repeated squaring; exact sign handling for negative real z.
cplx ipow(cplx z, std::int64_t n);

/// Principal power exp(a * Log z). 0^a is 0 for Re a > 0 and 1 for a = 0.
cplx cpow(cplx z, cplx a);

bool is_finite(cplx z);

/// |sum t_i| / sum |t_i|, the scale-free defect of a vanishing combination.
/// Returns 0 when every term is 0.
double relative_gap(std::span<const cplx> terms);
double relative_gap(std::initializer_list<cplx> terms);

/// Pairwise (tree) summation; result independent of thread scheduling.
double pairwise_sum(std::span<const double> values);
cplx pairwise_sum(std::span<const cplx> values);

/// True when z lies within `guard` (relative) of a point of base^Z.
bool near_lattice(cplx z, cplx base, double guard = kPoleGuard);

}  // namespace mockq
