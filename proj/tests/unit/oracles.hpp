// Independent reference computations for the unit tests. They use plain
// fixed-length loops and share no code with the library's adaptive sums.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

namespace oracle {

using cplx = std::complex<double>;

inline double rel(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline bool close(cplx a, cplx b, double tol) { return rel(a, b) < tol; }

inline cplx product(cplx x, double q, int factors) {
  cplx p{1.0, 0.0};
  double qj = 1.0;
  for (int j = 0; j < factors; ++j, qj *= q) p *= 1.0 - x * qj;
  return p;
}

inline cplx theta(cplx x, double q, int half_width = 60) {
  cplx s{};
  for (int n = -half_width; n <= half_width; ++n)
    s += std::pow(x, n) * std::pow(q, 0.5 * n * (n - 1));
  return s;
}

// sum_n (-1)^n y^n q^{m n(n+1)/2} / (1 - x q^n)
inline cplx appell_g(int m, cplx x, cplx y, double q, int half_width = 60) {
  cplx s{};
  for (int n = -half_width; n <= half_width; ++n)
    s += std::pow(-y, n) * std::pow(q, 0.5 * m * n * (n + 1)) / (1.0 - x * std::pow(q, n));
  return s;
}

// Entries of a vector of random complex numbers in the unit square.
inline std::vector<cplx> random_coeffs(unsigned seed, int count) {
  std::vector<cplx> out;
  unsigned s = seed;
  auto next = [&s] {
    s = s * 1664525u + 1013904223u;
    return (s >> 8) * (1.0 / 16777216.0) * 2.0 - 1.0;
  };
  for (int k = 0; k < count; ++k) {
    const double re = next();
    out.emplace_back(re, next());
  }
  return out;
}

}  // namespace oracle

// Variadic so brace-initialized arguments pass through the preprocessor.
#define CHECK_REL(...) CHECK(oracle::close(__VA_ARGS__))
