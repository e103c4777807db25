// Linear q-difference operators sum_k c_k(x) T^k, T f(x) = f(base * x),
// with Laurent-polynomial coefficients.
//
// Newton-Puiseux diagram convention: a monomial c x^k in the coefficient of
// T^l contributes the point (k, l). All rows l >= 0 are included. The
// reported boundary is the lower hull (minimal l for each k) traversed by
// increasing k, so its slopes are nondecreasing.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mockq/context.hpp"

namespace mockq {

/// Finite sum of c_p x^p over integer p. Exact zeros are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c * x^power.
  static LaurentPoly monomial(cplx c, int power = 0);

  const std::map<int, cplx>& monomials() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  cplx coefficient(int power) const;

  cplx operator()(cplx x) const;

  /// c(x * s) for s = base^shift, i.e. coefficients scaled by s^p.
  LaurentPoly dilated(cplx s) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator*=(cplx c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, cplx c) { return a *= c; }

  /// Drops monomials with |c| <= eps.
  LaurentPoly pruned(double eps) const;

 private:
  void add(int power, cplx c);
  std::map<int, cplx> terms_;
};

class QDiffOperator {
 public:
  /// The identity operator 1 * T^0.
  explicit QDiffOperator(cplx base);
  QDiffOperator(cplx base, std::map<int, LaurentPoly> terms);

  /// T^k.
  static QDiffOperator shift(cplx base, int k = 1);
  /// Multiplication by a Laurent polynomial.
  static QDiffOperator multiplication(cplx base, LaurentPoly c);

  cplx base() const { return base_; }
  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  int order() const;
  /// Coefficient of T^k (zero polynomial if absent).
  LaurentPoly coefficient(int k) const;
  int min_x_degree() const;
  int max_x_degree() const;

  QDiffOperator& operator+=(const QDiffOperator& other);
  friend QDiffOperator operator+(QDiffOperator a, const QDiffOperator& b) { return a += b; }

  /// Largest coefficient-wise difference |a - b| over all monomials.
  friend double max_coefficient_distance(const QDiffOperator& a, const QDiffOperator& b);

 private:
  void normalize();
  cplx base_;
  std::map<int, LaurentPoly> terms_;
};

/// A o B. Coefficients of B pass T^k as c(x) -> c(x base^k).
QDiffOperator compose(const QDiffOperator& a, const QDiffOperator& b);

/// prod_k (T - q^{alpha_k}), expanded.
QDiffOperator op_from_roots(std::span<const cplx> exponents, const QContext& ctx);

/// [prod_k (T - q^{alpha_k})] (T + x q^alpha).
QDiffOperator op_linear_eq(cplx alpha, std::span<const cplx> exponents, const QContext& ctx);
/// [prod_{k=1}^{m} (T - q^{k-1})] (T + x^m / y).
QDiffOperator op_appell(int m, cplx y, const QContext& ctx);
/// [prod_{k=1}^{m-1} (T - q^k)] (T + x^m).
QDiffOperator op_gm1(int m, const QContext& ctx);
/// T prod_k (T - q^{alpha_k}) + x prod_k (T - q^{beta_k}).
QDiffOperator op_diver(std::span<const cplx> alphas, std::span<const cplx> betas,
                       const QContext& ctx);

using ComplexFn = std::function<cplx(cplx)>;

/// sum_k c_k(x) f(x base^k).
cplx apply_numeric(const QDiffOperator& op, const ComplexFn& f, cplx x);

/// |sum_k c_k(x) f(x base^k)| / sum_k |c_k(x) f(x base^k)|; 0 when all terms vanish.
double relative_residual(const QDiffOperator& op, const ComplexFn& f, cplx x);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const;
};

struct NPDiagram {
  /// (x-degree k, shift order l), sorted.
  std::vector<std::pair<int, int>> points;
  /// Full convex hull, counter-clockwise from the smallest (k, l).
  std::vector<std::pair<int, int>> hull;
  /// Lower boundary from smallest to largest k.
  std::vector<std::pair<int, int>> hull_vertices;
  /// dl/dk along hull_vertices, nondecreasing.
  std::vector<Rational> slopes;
};

NPDiagram newton_puiseux(const QDiffOperator& op);

}  // namespace mockq
