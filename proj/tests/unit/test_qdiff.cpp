#include <algorithm>
#include <cmath>
#include <vector>

#include "mockq/errors.hpp"
#include "mockq/identities.hpp"
#include "mockq/qdiff.hpp"
#include "mockq/qseries.hpp"
#include "oracles.hpp"

using namespace mockq;

namespace {

using Points = std::vector<std::pair<int, int>>;

QDiffOperator linear(cplx base, cplx c0, cplx c1x) {
  // T + c0 + c1x * x
  QDiffOperator op = QDiffOperator::shift(base, 1);
  LaurentPoly c = LaurentPoly::monomial(c0, 0);
  c += LaurentPoly::monomial(c1x, 1);
  return op + QDiffOperator::multiplication(base, c);
}

QDiffOperator random_operator(unsigned seed, cplx base) {
  const auto c = oracle::random_coeffs(seed, 9);
  std::map<int, LaurentPoly> terms;
  for (int k = 0; k < 3; ++k) {
    LaurentPoly p;
    for (int d = -1; d <= 1; ++d) p += LaurentPoly::monomial(c[3 * k + d + 1], d);
    terms[k] = p;
  }
  return QDiffOperator(base, terms);
}

}  // namespace

TEST_CASE("Laurent polynomials") {
  LaurentPoly p = LaurentPoly::monomial(2.0, -1) + LaurentPoly::monomial(3.0, 2);
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 2);
  CHECK_REL(p(0.5), cplx{4.0 + 0.75}, 1e-15);
  CHECK_REL(p.dilated(0.5)(1.0), p(0.5), 1e-15);
  LaurentPoly zero = p + LaurentPoly::monomial(-2.0, -1) + LaurentPoly::monomial(-3.0, 2);
  CHECK(zero.is_zero());
  const LaurentPoly sq = p * p;
  CHECK_REL(sq(0.7), p(0.7) * p(0.7), 1e-14);
}

TEST_CASE("op_from_roots") {
  const QContext ctx(0.3);
  const QDiffOperator id = op_from_roots({}, ctx);
  REQUIRE(id.terms().size() == 1);
  CHECK(id.coefficient(0).coefficient(0) == cplx{1.0});

  const cplx e[] = {0.5, 1.2};
  const QDiffOperator op = op_from_roots(e, ctx);
  const cplx r1 = std::pow(0.3, 0.5);
  const cplx r2 = std::pow(0.3, 1.2);
  CHECK(op.order() == 2);
  CHECK_REL(op.coefficient(2).coefficient(0), cplx{1.0}, 1e-15);
  CHECK_REL(op.coefficient(1).coefficient(0), -(r1 + r2), 1e-15);
  CHECK_REL(op.coefficient(0).coefficient(0), r1 * r2, 1e-15);
}

TEST_CASE("compose: examples") {
  const cplx q = 0.25;
  const QDiffOperator T = QDiffOperator::shift(q);
  const QDiffOperator xid = QDiffOperator::multiplication(q, LaurentPoly::monomial(1.0, 1));
  const QDiffOperator id(q);

  CHECK(max_coefficient_distance(compose(id, T), T) == 0.0);
  const QDiffOperator tx = compose(T, xid);
  REQUIRE(tx.terms().size() == 1);
  CHECK_REL(tx.coefficient(1).coefficient(1), q, 1e-15);

  // (T - q^{1/2})(T + x q^{1/2}) = T^2 - (1 - xq) q^{1/2} T - xq
  const cplx s = std::sqrt(q);
  const QDiffOperator lhs = compose(linear(q, -s, 0.0), linear(q, 0.0, s));
  const cplx q32 = q * s;
  CHECK_REL(lhs.coefficient(2).coefficient(0), cplx{1.0}, 1e-15);
  CHECK_REL(lhs.coefficient(1).coefficient(0), -s, 1e-15);
  CHECK_REL(lhs.coefficient(1).coefficient(1), q32, 1e-15);
  CHECK_REL(lhs.coefficient(0).coefficient(1), -q, 1e-15);
  CHECK(lhs.coefficient(0).coefficient(0) == cplx{});
}

TEST_CASE("the zero operator cannot be constructed") {
  const cplx q = 0.3;
  CHECK_THROWS_AS(
      QDiffOperator::multiplication(q, LaurentPoly::monomial(1.0) + LaurentPoly::monomial(-1.0)),
      DomainError);
}

TEST_CASE("compose is associative") {
  const cplx q{0.35, 0.1};
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const QDiffOperator a = random_operator(seed, q);
    const QDiffOperator b = random_operator(seed + 100, q);
    const QDiffOperator c = random_operator(seed + 200, q);
    const QDiffOperator left = compose(compose(a, b), c);
    double scale = 1.0;
    for (const auto& [l, poly] : left.terms())
      for (const auto& [k, v] : poly.monomials()) scale = std::max(scale, std::abs(v));
    CHECK(max_coefficient_distance(left, compose(a, compose(b, c))) < 1e-13 * scale);
  }
}

TEST_CASE("op_from_roots is invariant under permutation of the roots") {
  const QContext ctx(0.42);
  std::vector<cplx> e = {0.1, 0.75, 1.3, 0.4};
  const QDiffOperator ref = op_from_roots(e, ctx);
  std::sort(e.begin(), e.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  do {
    CHECK(max_coefficient_distance(op_from_roots(e, ctx), ref) < 1e-13);
  } while (std::next_permutation(e.begin(), e.end(),
                                 [](cplx a, cplx b) { return a.real() < b.real(); }));
}

TEST_CASE("named operators expand as by hand") {
  const QContext ctx(0.3);
  const cplx q = 0.3;

  // (T - 1)(T + x/y)
  const QDiffOperator a1 = op_appell(1, 0.5, ctx);
  CHECK(a1.order() == 2);
  CHECK_REL(a1.coefficient(2).coefficient(0), cplx{1.0}, 1e-15);
  CHECK_REL(a1.coefficient(1).coefficient(0), cplx{-1.0}, 1e-15);
  CHECK_REL(a1.coefficient(1).coefficient(1), q / 0.5, 1e-15);
  CHECK_REL(a1.coefficient(0).coefficient(1), -1.0 / 0.5, 1e-15);

  // (T - q)(T + x^2) = T^2 + (q^2 x^2 - q) T - q x^2
  const QDiffOperator g = op_gm1(2, ctx);
  CHECK_REL(g.coefficient(1).coefficient(2), q * q, 1e-15);
  CHECK_REL(g.coefficient(1).coefficient(0), -q, 1e-15);
  CHECK_REL(g.coefficient(0).coefficient(2), -q, 1e-15);

  // T (T - q^a) + x (T - q^b)
  const cplx a[] = {0.4};
  const cplx b[] = {0.9};
  const QDiffOperator d = op_diver(a, b, ctx);
  CHECK_REL(d.coefficient(2).coefficient(0), cplx{1.0}, 1e-15);
  CHECK_REL(d.coefficient(1).coefficient(0), -std::pow(q, 0.4), 1e-15);
  CHECK_REL(d.coefficient(1).coefficient(1), cplx{1.0}, 1e-15);
  CHECK_REL(d.coefficient(0).coefficient(1), -std::pow(q, 0.9), 1e-15);

  // [prod (T - q^{a_k})](T + x q^alpha)
  const cplx e[] = {0.6};
  const QDiffOperator l = op_linear_eq(0.25, e, ctx);
  CHECK_REL(l.coefficient(1).coefficient(1), std::pow(q, 1.25), 1e-15);
  CHECK_REL(l.coefficient(0).coefficient(1), -std::pow(q, 0.85), 1e-15);
}

TEST_CASE("apply_numeric and relative_residual") {
  const QContext ctx(0.3);
  const cplx q = 0.3;
  const QDiffOperator t_minus_1 = QDiffOperator::shift(q) + QDiffOperator::multiplication(q, LaurentPoly::monomial(-1.0));
  CHECK(apply_numeric(t_minus_1, [](cplx) { return cplx{1.0}; }, 0.4) == cplx{});

  const double alpha = 0.7;
  const QDiffOperator eig =
      QDiffOperator::shift(q) + QDiffOperator::multiplication(q, LaurentPoly::monomial(-std::pow(0.3, alpha)));
  CHECK(relative_residual(eig, [=](cplx x) { return std::pow(x, alpha); }, 0.4) < 1e-15);

  const QDiffOperator g = op_gm1(2, ctx);
  const QContext q2 = ctx.with_nome(0.09);
  const ComplexFn sol = [&](cplx x) { return 1.0 / theta(-x * x, q2); };
  CHECK(relative_residual(g, sol, 0.4) < 1e-10);
  CHECK(relative_residual(g, [](cplx x) { return std::exp(x); }, 0.4) > 1e-2);
  CHECK(relative_residual(g, [](cplx) { return cplx{}; }, 0.4) == 0.0);
}

TEST_CASE("Newton-Puiseux diagrams") {
  const QContext ctx(0.3);
  const NPDiagram id = newton_puiseux(QDiffOperator(0.3));
  CHECK(id.points == Points{{0, 0}});
  CHECK(id.slopes.empty());

  const cplx a[] = {0.4};
  const cplx b[] = {0.9};
  const NPDiagram d = newton_puiseux(op_diver(a, b, ctx));
  CHECK(d.points == Points{{0, 1}, {0, 2}, {1, 0}, {1, 1}});
  CHECK(d.hull_vertices == Points{{0, 1}, {1, 0}});
  REQUIRE(d.slopes.size() == 1);
  CHECK(d.slopes[0] == Rational{-1, 1});

  const NPDiagram g = newton_puiseux(op_gm1(2, ctx));
  CHECK(g.points == Points{{0, 1}, {0, 2}, {2, 0}, {2, 1}});
  CHECK(g.hull_vertices == Points{{0, 1}, {2, 0}});
  REQUIRE(g.slopes.size() == 1);
  CHECK(g.slopes[0].str() == "-1/2");

  // Two slopes: points (0,2), (1,0), (3,1), plus (2,2) above the boundary.
  std::map<int, LaurentPoly> t;
  t[2] = LaurentPoly::monomial(1.0, 0) + LaurentPoly::monomial(1.0, 2);
  t[0] = LaurentPoly::monomial(1.0, 1);
  t[1] = LaurentPoly::monomial(1.0, 3);
  const NPDiagram h = newton_puiseux(QDiffOperator(0.3, t));
  CHECK(h.hull_vertices == Points{{0, 2}, {1, 0}, {3, 1}});
  CHECK(h.slopes == std::vector<Rational>{{-2, 1}, {1, 2}});
}
