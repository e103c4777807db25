#include <vector>

#include "mockq/errors.hpp"
#include "mockq/qseries.hpp"
#include "oracles.hpp"

using namespace mockq;

TEST_CASE("finite q-Pochhammer") {
  const QContext ctx(0.5);
  CHECK(qpoch_finite(0.5, 0, ctx) == cplx{1.0});
  CHECK(qpoch_finite(0.5, 1, ctx) == cplx{0.5});
  CHECK(qpoch_finite(0.5, 2, ctx).real() == doctest::Approx(0.375).epsilon(1e-15));
  CHECK_REL(qpoch_finite(cplx{0.2, 0.7}, 9, QContext(0.45)), oracle::product({0.2, 0.7}, 0.45, 9),
            1e-14);
}

TEST_CASE("infinite q-Pochhammer") {
  CHECK(qpoch_inf(0.0, QContext(0.3)) == cplx{1.0});
  const double tiny = 1e-12;
  CHECK(std::abs(qpoch_inf(tiny, QContext(tiny)) - (1.0 - tiny)) < 1e-15);
  CHECK_REL(qpoch_inf(0.5, QContext(0.5)), oracle::product(0.5, 0.5, 200), 1e-14);
  // 30-digit reference: (0.5;0.5)_inf = 0.28878809508660242127889...
  CHECK_REL(qpoch_inf(0.5, QContext(0.5)), cplx{0.2887880950866024212788997}, 2e-16);
  CHECK_REL(qpoch_inf(cplx{-0.4, 1.1}, QContext(0.6)), oracle::product({-0.4, 1.1}, 0.6, 400),
            1e-13);
}

TEST_CASE("q-Pochhammer with complex order") {
  const QContext ctx(0.4);
  CHECK_REL(qpoch_nu(0.3, 0.0, ctx), cplx{1.0}, 1e-15);
  CHECK_REL(qpoch_nu(0.3, 2.0, ctx), qpoch_finite(0.3, 2, ctx), 1e-12);
  CHECK_REL(qpoch_nu(0.3, 0.5, ctx), qpoch_nu(0.3, 0.5, ctx.with_doubled_truncation()), 1e-12);
  CHECK_REL(qpoch_nu(0.3, 0.5, ctx), cplx{0.7981648234842818486898258}, 1e-14);
  for (int n = 0; n <= 6; ++n) CHECK_REL(qpoch_nu(0.7, n, ctx), qpoch_finite(0.7, n, ctx), 1e-12);
  // (q^{-1} x; q)_inf vanishes when x = q.
  CHECK_THROWS_AS(qpoch_nu(0.4, cplx{-1.0}, ctx), PoleError);
}

TEST_CASE("theta: examples and both modes") {
  const QContext ctx(0.3);
  CHECK(theta(-1.0, ctx) == cplx{});
  CHECK(std::abs(theta(-1.0, ctx, ThetaMode::product)) == 0.0);
  CHECK_REL(theta(0.7, ctx), cplx{2.34226053981101562002471}, 2e-16);
  CHECK_REL(theta(0.7, ctx), oracle::theta(0.7, 0.3), 1e-14);
  const double x = 0.7;
  const double q = 0.3;
  CHECK(std::abs(x * x * x * q * q * q * theta(x * q * q * q, ctx) - theta(x, ctx)) < 1e-12);
  CHECK_REL(theta(cplx{1.0, 2.0}, QContext(0.2)),
            cplx(1.350590569087466735124853, 2.701181138174933470249706), 1e-15);
  CHECK_THROWS_AS(theta(0.0, ctx), DomainError);
}

TEST_CASE("theta: doubled truncation does not move the value") {
  for (double q : {0.05, 0.3, 0.6, 0.9}) {
    const QContext ctx(q);
    for (cplx x : {cplx{0.4}, cplx{-2.5, 0.3}, cplx{0.1, -0.9}}) {
      // theta(|x|) bounds the sum of |terms|, which sets the attainable accuracy near zeros.
      const double scale = std::abs(oracle::theta(std::abs(x), q));
      CHECK(std::abs(theta(x, ctx) - theta(x, ctx.with_doubled_truncation())) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("basic hypergeometric series") {
  const QContext ctx(0.3);
  const cplx num[] = {0.3};
  CHECK(qhyper(num, {}, 0.0, ctx) == cplx{1.0});
  // 1phi0(q; -; q; z) telescopes to 1/(1 - z).
  CHECK_REL(qhyper(num, {}, 0.3, ctx), cplx{1.0 / 0.7}, 1e-12);
  cplx geometric{};
  for (int n = 0; n < 60; ++n) geometric += std::pow(0.3, n);
  CHECK_REL(qhyper(num, {}, 0.3, ctx), geometric, 1e-12);

  // q-binomial theorem: 1phi0(a; -; q; z) = (az)_inf / (z)_inf.
  const cplx a[] = {0.55};
  CHECK_REL(qhyper(a, {}, 0.4, ctx), qpoch_inf(0.22, ctx) / qpoch_inf(0.4, ctx), 1e-13);

  // Euler: 0phi0(-; -; q; z) with the balancing factor equals (z)_inf.
  CHECK_REL(qhyper({}, {}, 0.45, ctx), qpoch_inf(0.45, ctx), 1e-13);

  // Terminating series: q-Chu-Vandermonde, 2phi1(q^-n, a; c; q; q) = (c/a)_n/(c)_n a^n.
  const double q = 0.3;
  const int n = 4;
  const cplx tn[] = {std::pow(q, -n), 0.5};
  const cplx td[] = {0.7};
  const cplx expected =
      qpoch_finite(0.7 / 0.5, n, ctx) / qpoch_finite(0.7, n, ctx) * std::pow(0.5, n);
  double scale = 0.0;
  cplx term = 1.0;
  for (int k = 0; k <= n; ++k) {
    scale += std::abs(term);
    term *= (1.0 - tn[0] * std::pow(q, k)) * (1.0 - tn[1] * std::pow(q, k)) /
            ((1.0 - td[0] * std::pow(q, k)) * (1.0 - std::pow(q, k + 1))) * q;
  }
  CHECK(std::abs(qhyper(tn, td, q, ctx) - expected) <= 1e-14 * scale);
}

TEST_CASE("divergent series have coefficients but no value") {
  const QContext ctx(0.3);
  const cplx num[] = {0.3, 0.0};
  CHECK_THROWS_AS(qhyper(num, {}, 0.1, ctx), DivergentSeriesError);
  const PuiseuxSeries s = qhyper_coeffs(num, {}, 6, ctx);
  REQUIRE(s.coeffs.size() == 7);
  // 2phi0(q, 0; -; q; z): A_n = ((-1)^n q^{n(n-1)/2})^{-1}.
  for (int k = 0; k <= 6; ++k)
    CHECK_REL(s.coeffs[k], std::pow(-1.0, k) * std::pow(0.3, -0.5 * k * (k - 1)), 1e-13);
  const cplx one[] = {0.5};
  CHECK_THROWS_AS(qhyper(one, {}, 1.5, ctx), DivergentSeriesError);
}

TEST_CASE("evaluators are bit-reproducible") {
  const QContext ctx(0.37);
  const cplx x{0.41, 0.2};
  CHECK(theta(x, ctx) == theta(x, ctx));
  CHECK(qpoch_inf(x, ctx) == qpoch_inf(x, ctx));
}
