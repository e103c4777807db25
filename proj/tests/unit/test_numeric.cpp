#include <array>
#include <numbers>
#include <vector>

#include "mockq/context.hpp"
#include "mockq/errors.hpp"
#include "mockq/numeric.hpp"
#include "oracles.hpp"

using namespace mockq;

TEST_CASE("ipow matches repeated multiplication") {
  const cplx z{0.7, -0.3};
  cplx p{1.0, 0.0};
  for (int n = 0; n <= 12; ++n) {
    CHECK_REL(ipow(z, n), p, 1e-15);
    CHECK_REL(ipow(z, -n), 1.0 / p, 1e-15);
    p *= z;
  }
  CHECK(ipow(cplx{-2.0, 0.0}, 3) == cplx{-8.0, 0.0});
}

TEST_CASE("cpow takes the principal branch") {
  CHECK_REL(cpow(cplx{-1.0, 0.0}, 0.5), kI, 1e-15);
  CHECK_REL(cpow(cplx{4.0, 0.0}, 0.5), cplx{2.0, 0.0}, 1e-15);
  CHECK(cpow(cplx{}, 0.0) == cplx{1.0, 0.0});
  CHECK(cpow(cplx{}, 1.5) == cplx{});
  const cplx z{0.3, 0.4};
  CHECK_REL(cpow(z, 3.0), z * z * z, 1e-15);
}

TEST_CASE("relative_gap is scale free") {
  CHECK(relative_gap({cplx{1.0}, cplx{-1.0}}) == 0.0);
  CHECK(relative_gap({cplx{}, cplx{}}) == 0.0);
  CHECK(relative_gap({cplx{1.0}, cplx{1.0}}) == doctest::Approx(1.0));
  CHECK(relative_gap({cplx{1e20}, cplx{-1e20 * (1 + 1e-10)}}) < 1e-9);
}

TEST_CASE("pairwise_sum is exact on small integers and order independent for a reversal") {
  std::vector<double> v;
  for (int k = 1; k <= 1000; ++k) v.push_back(k);
  CHECK(pairwise_sum(v) == 500500.0);
  std::vector<double> w(v.rbegin(), v.rend());
  CHECK(pairwise_sum(w) == 500500.0);
  std::vector<double> empty;
  CHECK(pairwise_sum(empty) == 0.0);
}

TEST_CASE("near_lattice detects powers of the base") {
  const cplx q{0.3, 0.0};
  CHECK(near_lattice(ipow(q, 4), q));
  CHECK(near_lattice(ipow(q, -3), q));
  CHECK(near_lattice(cplx{1.0, 0.0}, q));
  CHECK(near_lattice(cplx{0.3 * (1 + 1e-8), 0.0}, q));
  CHECK_FALSE(near_lattice(cplx{0.3 * (1 + 1e-4), 0.0}, q));
  CHECK_FALSE(near_lattice(cplx{-0.3, 0.0}, q));
  CHECK_FALSE(near_lattice(cplx{0.5, 0.0}, q));
}

TEST_CASE("QContext validates its settings") {
  CHECK_THROWS_AS(QContext(1.0), DomainError);
  CHECK_THROWS_AS(QContext(cplx{0.0, 1.0}), DomainError);
  QSettings s;
  s.tol = 0.0;
  CHECK_THROWS_AS(QContext(0.3, s), DomainError);
  s = {};
  s.contour_points = 4;
  CHECK_THROWS_AS(QContext(0.3, s), DomainError);
  const QContext ctx(0.3);
  const QContext doubled = ctx.with_doubled_truncation();
  CHECK(doubled.truncation_scale() == 2);
  CHECK(doubled.max_terms() == 2 * ctx.max_terms());
  CHECK(ctx.with_nome(0.09).q() == cplx{0.09});
}
