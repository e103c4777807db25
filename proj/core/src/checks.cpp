// The identity registry. Samplers draw real positive parameters from the
// guard band [q^0.9, q^0.1] unless stated otherwise and reject draws that
// land within the pole guard of a lattice the identity divides by.
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mockq/errors.hpp"
#include "mockq/identities.hpp"
#include "mockq/mock.hpp"
#include "mockq/qdiff.hpp"
#include "mockq/qseries.hpp"
#include "mockq/transforms.hpp"
#include "mockq/verify.hpp"

namespace mockq {

namespace {

constexpr int kMaxDraws = 1000;
constexpr char kBand[] = "q in [q_min, q_max]; x, y, lambda in [q^0.9, q^0.1]";

double rel_diff(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

bool off(cplx z, cplx base) { return !near_lattice(z, base); }

double draw_q(SampleRng& rng, const RunOptions& o) { return rng.uniform(o.q_min, o.q_max); }
double band(SampleRng& rng, double q) { return std::pow(q, rng.uniform(0.1, 0.9)); }
double exponent(SampleRng& rng) { return rng.uniform(0.1, 1.5); }

template <class Make, class Ok>
Sample draw_until(SampleRng& rng, const RunOptions& o, Make make, Ok ok) {
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Sample s = make(rng, o);
    if (ok(s)) return s;
  }
  throw DomainError("sampler could not find a guarded point");
}

QContext at(const Sample& s, const QContext& ctx) { return ctx.with_nome(s["q"]); }

Evaluation single(double r) { return Evaluation{{r}, false}; }

std::string key(const char* stem, int m) { return std::string(stem) + std::to_string(m); }

std::vector<cplx> params(const Sample& s, const char* stem, int count) {
  std::vector<cplx> out;
  for (int k = 1; k <= count; ++k) out.push_back(s[key(stem, k)]);
  return out;
}

// Exponent lists with no pair differing by exactly 1 (that would make a
// denominator parameter of the formal solutions hit q^0).
bool non_resonant(const std::vector<cplx>& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && std::abs(std::abs(e[i] - e[j]) - 1.0) < 1e-3) return false;
  return true;
}

// q, x, y.
Sample draw_qxy(SampleRng& rng, const RunOptions& o) {
  Sample s;
  const double q = draw_q(rng, o);
  s.set("q", q).set("x", band(rng, q)).set("y", band(rng, q));
  return s;
}

// q, x, lambda.
Sample draw_qxl(SampleRng& rng, const RunOptions& o) {
  Sample s;
  const double q = draw_q(rng, o);
  s.set("q", q).set("x", band(rng, q)).set("lambda", band(rng, q));
  return s;
}

Sample draw_qx(SampleRng& rng, const RunOptions& o) {
  Sample s;
  const double q = draw_q(rng, o);
  s.set("q", q).set("x", band(rng, q));
  return s;
}

// ---------------------------------------------------------------------------

void add_theta(std::vector<IdentityCheck>& r) {
  r.push_back({
      "theta_modes",
      "sum_n x^n q^{n(n-1)/2} = (q, -x, -q/x; q)_inf",
      kBand,
      Tier::core,
      1e-12,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) { return draw_qx(rng, o); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(theta(s["x"], c, ThetaMode::sum), theta(s["x"], c, ThetaMode::product)));
      },
  });
  r.push_back({
      "theta_shift",
      "x^n q^{n(n-1)/2} theta_q(x q^n) = theta_q(x), n = -3..3",
      kBand,
      Tier::core,
      1e-12,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) { return draw_qx(rng, o); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        const cplx q = c.q();
        const cplx x = s["x"];
        const cplx base = theta(x, c);
        double worst = 0.0;
        for (int n = -3; n <= 3; ++n) {
          const cplx lhs = ipow(x, n) * ipow(q, static_cast<std::int64_t>(n) * (n - 1) / 2) *
                           theta(x * ipow(q, n), c);
          worst = std::max(worst, rel_diff(lhs, base));
        }
        return single(worst);
      },
  });
}

void add_mu(std::vector<IdentityCheck>& r) {
  auto guard_xy = [](const Sample& s) {
    const cplx q = s["q"];
    return off(s["x"], q) && off(s["y"], q);
  };
  r.push_back({
      "mu_symmetry",
      "mu(x, y) = mu(y, x)",
      kBand,
      Tier::core,
      1e-9,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(mu(s["x"], s["y"], c), mu(s["y"], s["x"], c)));
      },
  });
  r.push_back({
      "mu_inversion",
      "mu(x, y) = mu(1/x, 1/y)",
      kBand,
      Tier::core,
      1e-9,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(mu(s["x"], s["y"], c), mu(1.0 / s["x"], 1.0 / s["y"], c)));
      },
  });
  r.push_back({
      "mu_shift",
      "mu(xq, y) = -(x/y) q^{1/2} mu(x, y) - i sqrt(x/y) q^{3/8}",
      kBand,
      Tier::core,
      1e-9,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        const cplx q = c.q();
        const cplx x = s["x"];
        const cplx y = s["y"];
        const cplx lhs = mu(x * q, y, c);
        const cplx t1 = -(x / y) * std::sqrt(q) * mu(x, y, c);
        const cplx t2 = -kI * std::sqrt(x / y) * cpow(q, 0.375);
        return single(relative_gap({lhs, -t1, -t2}));
      },
  });
  r.push_back({
      "mu_translation",
      "mu(xz, yz) = mu(x, y) - i q^{-1/8} sqrt(xy) (q)_inf^3 theta(-z) theta(-xyz) / "
      "[theta(-x) theta(-y) theta(-xz) theta(-yz)]",
      "q in [q_min, q_max]; x, y, z in [q^0.9, q^0.1]; xz, yz, xyz off q^Z",
      Tier::core,
      1e-9,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) {
        return draw_until(
            rng, o,
            [](SampleRng& g, const RunOptions& opt) {
              Sample s = draw_qxy(g, opt);
              s.set("z", band(g, s["q"].real()));
              return s;
            },
            [=](const Sample& s) {
              const cplx q = s["q"];
              const cplx z = s["z"];
              return guard_xy(s) && off(z, q) && off(s["x"] * z, q) && off(s["y"] * z, q) &&
                     off(s["x"] * s["y"] * z, q);
            });
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        const cplx z = s["z"];
        return single(
            rel_diff(mu(s["x"] * z, s["y"] * z, c), mu_translation_rhs(s["x"], s["y"], z, c)));
      },
  });
  r.push_back({
      "a1_mu",
      "A_1(x, y) = -i q^{1/8} theta(-y) / sqrt(y) mu(x, y)",
      kBand,
      Tier::core,
      1e-10,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(appell_A(1, s["x"], s["y"], c), a1_from_mu(s["x"], s["y"], c)));
      },
  });
}

void add_kang(std::vector<IdentityCheck>& r) {
  r.push_back({
      "kang_g2",
      "g2(x) = -i q^{-1/4} mu(x^2, q; q^2) + (q^2;q^2)^4 / ((q;q)^2 theta_{q^2}(-x^2))",
      "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z, x^2 off q^{2Z}",
      Tier::core,
      1e-9,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) {
        return draw_until(rng, o, draw_qx, [](const Sample& s) {
          const cplx q = s["q"];
          return off(s["x"], q) && off(s["x"] * s["x"], q * q);
        });
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(g2_series(s["x"], c), g2_from_mu(s["x"], c)));
      },
  });
  r.push_back({
      "kang_g3",
      "g3(x) = -i x^{-1/2} q^{-1/8} mu(x^3, q; B) - i x^{1/2} q^{-5/8} mu(x^3, q^2; q^3) "
      "+ (q^3;q^3)^3 / ((q;q) theta_{q^3}(-x^3)), B = q^2 or q^3",
      "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z, x^3 off q^{2Z} and q^{3Z}; "
      "left side summed with doubled truncation",
      Tier::core,
      1e-9,
      {"q^2", "q^3"},
      "resolved_base",
      [](SampleRng& rng, const RunOptions& o) {
        return draw_until(rng, o, draw_qx, [](const Sample& s) {
          const cplx q = s["q"];
          const cplx x3 = s["x"] * s["x"] * s["x"];
          return off(s["x"], q) && off(x3, q * q) && off(x3, q * q * q);
        });
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        const cplx lhs = g3_series(s["x"], c.with_doubled_truncation());
        return Evaluation{{rel_diff(lhs, g3_from_mu(s["x"], G3Base::q_squared, c)),
                           rel_diff(lhs, g3_from_mu(s["x"], G3Base::q_cubed, c))},
                          false};
      },
  });
  r.push_back({
      "lerch_g2",
      "g2(x) = (-q)_inf / (q)_inf G_2(x, 1)",
      "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z",
      Tier::core,
      1e-9,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) {
        return draw_until(rng, o, draw_qx, [](const Sample& s) { return off(s["x"], s["q"]); });
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(g2_series(s["x"], c), g2_lerch(s["x"], c)));
      },
  });
  r.push_back({
      "lerch_g3",
      "g3(x) = G_3(x, 1) / (q)_inf",
      "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z",
      Tier::core,
      1e-9,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) {
        return draw_until(rng, o, draw_qx, [](const Sample& s) { return off(s["x"], s["q"]); });
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return single(rel_diff(g3_series(s["x"], c), g3_lerch(s["x"], c)));
      },
  });
}

void add_appell(std::vector<IdentityCheck>& r) {
  auto guard_xy = [](const Sample& s) {
    const cplx q = s["q"];
    return off(s["x"], q) && off(s["y"], q);
  };
  for (int m = 1; m <= 3; ++m) {
    r.push_back({
        key("zwegers_Z_", m),
        "A_m(x, (-1)^{m-1} y) = sum_{k<m} -i q^{m/8} x^k theta_{q^m}(-y q^k) (y q^k)^{-1/2} "
        "mu(x^m, y q^k; q^m)",
        kBand,
        Tier::core,
        1e-9,
        {},
        {},
        [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const cplx y = s["y"];
          const cplx lhs = appell_A(m, s["x"], (m % 2 == 1) ? y : -y, c);
          return single(rel_diff(lhs, appell_A_from_mu(m, s["x"], y, c)));
        },
    });
  }
  for (int m = 1; m <= 3; ++m) {
    r.push_back({
        key("gm_mu_", m),
        "G_m(x, y) = -i q^{m/8} sum_{k<m} theta_{q^m}(-y q^k) / sqrt(y q^k) x^{k-m/2} "
        "mu(x^m, y q^k; q^m)",
        kBand,
        Tier::core,
        1e-9,
        {},
        {},
        [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          return single(
              rel_diff(appell_G(m, s["x"], s["y"], c), appell_G_from_mu(m, s["x"], s["y"], c)));
        },
    });
  }
  for (int m = 1; m <= 4; ++m) {
    r.push_back({
        key("gm_pseudoperiod_", m),
        "y G_m(xq, y) + x^m G_m(x, y) + sum_{k<m} x^k theta_{q^m}(-y q^k) = 0",
        kBand,
        Tier::core,
        1e-9,
        {},
        {},
        [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const cplx x = s["x"];
          const cplx y = s["y"];
          return single(relative_gap({y * appell_G(m, x * c.q(), y, c),
                                      ipow(x, m) * appell_G(m, x, y, c),
                                      appell_G_shift_source(m, x, y, c)}));
        },
    });
  }
  for (int m = 1; m <= 3; ++m) {
    r.push_back({
        key("thm12_", m),
        "[prod_{k=1}^{m} (T - q^{k-1})] (T + x^m / y) G_m(x, y) = 0",
        kBand,
        Tier::core,
        1e-8,
        {},
        {},
        [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_qxy, guard_xy); },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const cplx y = s["y"];
          const ComplexFn f = [&](cplx x) { return appell_G(m, x, y, c); };
          return single(relative_residual(op_appell(m, y, c), f, s["x"]));
        },
    });
  }
}

void add_linear_eq(std::vector<IdentityCheck>& r) {
  for (int m = 2; m <= 4; ++m) {
    r.push_back({
        key("thm11_", m),
        "[prod_{k<m} (T - q^{alpha_k})] (T + x q^alpha) f = 0 for f = 1/theta(-x q^alpha) and "
        "f = x^{P} mu(x lambda q^alpha, lambda q^{alpha_j}), P = alpha + alpha_j - 1/2 "
        "or alpha_j - 1/2",
        "q in [q_min, q_max]; x, lambda in [q^0.9, q^0.1]; alpha, alpha_j in [0.1, 1.5]; "
        "x q^alpha, x lambda q^alpha, lambda q^{alpha_j} off q^Z",
        Tier::core,
        1e-8,
        {"x^{alpha+alpha_j-1/2}", "x^{alpha_j-1/2}"},
        "resolved_form",
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(
              rng, o,
              [m](SampleRng& g, const RunOptions& opt) {
                Sample s = draw_qxl(g, opt);
                s.set("alpha", exponent(g));
                for (int k = 1; k < m; ++k) s.set(key("alpha_", k), exponent(g));
                return s;
              },
              [m](const Sample& s) {
                const cplx q = s["q"];
                const cplx qa = cpow(q, s["alpha"]);
                if (!off(s["x"] * qa, q) || !off(s["x"] * s["lambda"] * qa, q)) return false;
                for (int k = 1; k < m; ++k)
                  if (!off(s["lambda"] * cpow(q, s[key("alpha_", k)]), q)) return false;
                return true;
              });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const cplx alpha = s["alpha"];
          const cplx lambda = s["lambda"];
          const std::vector<cplx> exps = params(s, "alpha_", m - 1);
          const QDiffOperator op = op_linear_eq(alpha, exps, c);
          const double theta_res = relative_residual(
              op, [&](cplx x) { return linear_eq_theta_solution(x, alpha, c); }, s["x"]);
          Evaluation ev{{theta_res, theta_res}, false};
          const MuSolutionPower powers[] = {MuSolutionPower::alpha_plus_alpha_j,
                                            MuSolutionPower::alpha_j};
          for (std::size_t p = 0; p < 2; ++p) {
            for (const cplx aj : exps) {
              const double res = relative_residual(
                  op,
                  [&](cplx x) {
                    return linear_eq_mu_solution(x, alpha, aj, lambda, powers[p], c);
                  },
                  s["x"]);
              ev.residuals[p] = std::max(ev.residuals[p], res);
            }
          }
          return ev;
        },
    });
  }
}

// Guards shared by the y = 1 corollaries: G_m(x,1), 1/theta_{q^m}(-x^m) and
// mu(x^m lambda, lambda q^j; q^m), j < m, at x and (for the inversion) q/x.
bool guard_gm1(const Sample& s, int m, bool with_lambda) {
  const cplx q = s["q"];
  const cplx qm = ipow(q, m);
  const cplx xm = ipow(s["x"], m);
  if (!off(s["x"], q) || !off(xm, qm)) return false;
  if (!with_lambda) return true;
  const cplx l = s["lambda"];
  if (!off(l, qm) || !off(xm * l, qm) || !off(l / xm, qm)) return false;
  for (int j = 1; j < m; ++j)
    if (!off(l * ipow(q, j), qm)) return false;
  return true;
}

std::vector<ComplexFn> gm1_solutions(int m, cplx lambda, const QContext& c) {
  std::vector<ComplexFn> out;
  out.push_back([m, &c](cplx x) { return appell_G(m, x, 1.0, c); });
  out.push_back([m, &c](cplx x) { return gm1_theta_solution(m, x, c); });
  for (int j = 1; j < m; ++j)
    out.push_back([m, j, lambda, &c](cplx x) { return gm1_mu_solution(m, j, x, lambda, c); });
  return out;
}

void add_corollaries(std::vector<IdentityCheck>& r) {
  for (int m = 2; m <= 3; ++m) {
    r.push_back({
        key("corA_", m),
        "G_m(xq, 1) + x^m G_m(x, 1) + sum_{k<m} x^k theta_N(-q^k) = 0, N = q or q^m",
        "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z",
        Tier::core,
        1e-9,
        {"theta_q", "theta_{q^m}"},
        "resolved_base",
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(rng, o, draw_qx, [m](const Sample& s) { return guard_gm1(s, m, false); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const cplx x = s["x"];
          const cplx a = appell_G(m, x * c.q(), 1.0, c);
          const cplx b = ipow(x, m) * appell_G(m, x, 1.0, c);
          return Evaluation{
              {relative_gap({a, b, appell_G1_shift_source(m, x, ThetaNome::q, c)}),
               relative_gap({a, b, appell_G1_shift_source(m, x, ThetaNome::q_pow_m, c)})},
              false};
        },
    });
    r.push_back({
        key("corB_", m),
        "[prod_{k=1}^{m-1} (T - q^k)] (T + x^m) G_m(x, 1) = 0",
        "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z",
        Tier::core,
        1e-8,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(rng, o, draw_qx, [m](const Sample& s) { return guard_gm1(s, m, false); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const ComplexFn f = [&](cplx x) { return appell_G(m, x, 1.0, c); };
          return single(relative_residual(op_gm1(m, c), f, s["x"]));
        },
    });
    r.push_back({
        key("corC_", m),
        "G_m(x, 1) = (q^m;q^m)^3 / theta_{q^m}(-x^m) - sum_{j=1}^{m-1} i theta_{q^m}(-q^j) "
        "x^{j-m/2} q^{m/8-j/2} mu(x^m, q^j; q^m)",
        "q in [q_min, q_max]; x in [q^0.9, q^0.1]; x off q^Z",
        Tier::core,
        1e-9,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(rng, o, draw_qx, [m](const Sample& s) { return guard_gm1(s, m, false); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          return single(rel_diff(appell_G(m, s["x"], 1.0, c), appell_G1_closed_form(m, s["x"], c)));
        },
    });
    r.push_back({
        key("corC_solutions_", m),
        "[prod_{k=1}^{m-1} (T - q^k)] (T + x^m) f = 0 for f = 1/theta_{q^m}(-x^m) and "
        "f = x^{j-m/2} mu(x^m lambda, lambda q^j; q^m), j = 1..m-1",
        kBand,
        Tier::core,
        1e-8,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(rng, o, draw_qxl, [m](const Sample& s) { return guard_gm1(s, m, true); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const QDiffOperator op = op_gm1(m, c);
          double worst = 0.0;
          for (const auto& f : gm1_solutions(m, s["lambda"], c))
            worst = std::max(worst, relative_residual(op, f, s["x"]));
          return single(worst);
        },
    });
    r.push_back({
        key("corD_", m),
        "G_m(x, 1) in the lambda-shifted fundamental solutions, for generic lambda",
        kBand,
        Tier::core,
        1e-9,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(rng, o, draw_qxl, [m](const Sample& s) { return guard_gm1(s, m, true); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          return single(rel_diff(appell_G(m, s["x"], 1.0, c),
                                 appell_G1_lambda_form(m, s["x"], s["lambda"], c)));
        },
    });
    r.push_back({
        key("corE_", m),
        "if f solves [prod_{k=1}^{m-1} (T - q^k)] (T + x^m) f = 0 then so does f(q/x)",
        kBand,
        Tier::core,
        1e-8,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(rng, o, draw_qxl, [m](const Sample& s) { return guard_gm1(s, m, true); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const QDiffOperator op = op_gm1(m, c);
          const cplx q = c.q();
          double worst = 0.0;
          for (const auto& f : gm1_solutions(m, s["lambda"], c)) {
            const ComplexFn g = [&](cplx x) { return f(q / x); };
            worst = std::max(worst, relative_residual(op, g, s["x"]));
          }
          return single(worst);
        },
    });
  }
}

void add_transforms(std::vector<IdentityCheck>& r) {
  r.push_back({
      "borel_laplace_mu",
      "x^alpha L^+(B^+(2phi0(q, 0; -; q; x q^{-alpha-1})))(x, -1/lambda) = "
      "i q^{1/8} x^{alpha-1/2} lambda^{-1/2} C mu(x lambda, lambda q^alpha), C = 1 "
      "or sqrt(lambda q^alpha)",
      "q in [q_min, q_max]; x, lambda in [q^0.9, q^0.1]; alpha in [0.1, 1.5]; "
      "x lambda, lambda q^alpha off q^Z",
      Tier::core,
      1e-9,
      {"lambda^{-1/2}", "lambda^{-1/2} sqrt(lambda q^alpha)"},
      "resolved_form",
      [](SampleRng& rng, const RunOptions& o) {
        return draw_until(
            rng, o,
            [](SampleRng& g, const RunOptions& opt) {
              Sample s = draw_qxl(g, opt);
              s.set("alpha", exponent(g));
              return s;
            },
            [](const Sample& s) {
              const cplx q = s["q"];
              return off(s["x"] * s["lambda"], q) && off(s["lambda"] * cpow(q, s["alpha"]), q);
            });
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        const cplx a = s["alpha"];
        const cplx x = s["x"];
        const cplx l = s["lambda"];
        const cplx lhs = borel_laplace_resum(a, x, l, c);
        return Evaluation{
            {rel_diff(lhs, borel_laplace_mu_form(a, x, l, ResummationConstant::unit, c)),
             rel_diff(lhs, borel_laplace_mu_form(a, x, l, ResummationConstant::exact, c))},
            false};
      },
  });
  r.push_back({
      "bl_commutation",
      "B^{+-}(x^m T^n f) = q^{+-m(m-1)/2} xi^m T^{n+-m} B^{+-}(f)",
      "q in [q_min, q_max]; f of degree 10 with coefficients in the unit square; "
      "m, n in 0..3; both signs",
      Tier::core,
      1e-13,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) {
        Sample s;
        s.set("q", draw_q(rng, o));
        for (int k = 0; k <= 10; ++k)
          s.set(key("c_", k), cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
        return s;
      },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        PuiseuxSeries f;
        f.coeffs.clear();
        for (int k = 0; k <= 10; ++k) f.coeffs.push_back(s[key("c_", k)]);
        double worst = 0.0;
        for (int m = 0; m <= 3; ++m)
          for (int n = 0; n <= 3; ++n) worst = std::max(worst, commutation_check(m, n, f, c));
        return single(worst);
      },
  });
}

// Exponents for the divergent-series operator of order m.
Sample draw_diver(SampleRng& rng, int m, double q_lo, double q_hi) {
  Sample s;
  const double q = rng.uniform(q_lo, q_hi);
  s.set("q", q).set("x", band(rng, q));
  for (int k = 1; k < m; ++k) s.set(key("alpha_", k), exponent(rng));
  for (int k = 1; k < m; ++k) s.set(key("beta_", k), exponent(rng));
  return s;
}

bool guard_diver(const Sample& s, int m) {
  const cplx q = s["q"];
  const auto a = params(s, "alpha_", m - 1);
  const auto b = params(s, "beta_", m - 1);
  if (!non_resonant(a) || !non_resonant(b)) return false;
  cplx shift{};
  for (int k = 0; k < m - 1; ++k) shift += b[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(k)];
  const cplx x = s["x"];
  // theta prefactors of both integral solutions (and the shifted variant).
  return off(x * cpow(q, shift), q) && off(x, q);
}

void add_lemma(std::vector<IdentityCheck>& r) {
  for (int m = 2; m <= 3; ++m) {
    r.push_back({
        key("lemma31_formal_", m),
        "[T prod_k (T - q^{alpha_k}) + x prod_k (T - q^{beta_k})] annihilates the m phi m-2 "
        "formal solutions around 0 and infinity, coefficient-wise through order 30",
        "q in [0.35, 0.5]; alpha_k, beta_k in [0.1, 1.5] with no two differing by 1",
        Tier::core,
        1e-10,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(
              rng, o, [m](SampleRng& g, const RunOptions&) { return draw_diver(g, m, 0.35, 0.5); },
              [m](const Sample& s) { return guard_diver(s, m); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const auto a = params(s, "alpha_", m - 1);
          const auto b = params(s, "beta_", m - 1);
          const QDiffOperator op = op_diver(a, b, c);
          double worst = 0.0;
          for (ExpansionPoint p : {ExpansionPoint::zero, ExpansionPoint::infinity})
            for (int j = 0; j < m - 1; ++j)
              worst = std::max(worst, formal_residual(op, formal_solution(p, j, a, b, 30, c)));
          return single(worst);
        },
    });
  }
  for (int m = 2; m <= 3; ++m) {
    r.push_back({
        key("lemma31_integral_", m),
        "the contour-integral solutions around 0 and infinity are annihilated by "
        "T prod_k (T - q^{alpha_k}) + x prod_k (T - q^{beta_k}); infinity kernel shifted "
        "or exact",
        "q in [q_min, q_max]; x in [q^0.9, q^0.1]; alpha_k, beta_k in [0.1, 1.5]; "
        "theta prefactors nonzero",
        Tier::core,
        1e-8,
        {"shifted", "exact"},
        "resolved_form",
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(
              rng, o,
              [m](SampleRng& g, const RunOptions& opt) {
                return draw_diver(g, m, opt.q_min, opt.q_max);
              },
              [m](const Sample& s) { return guard_diver(s, m); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          const auto a = params(s, "alpha_", m - 1);
          const auto b = params(s, "beta_", m - 1);
          const QDiffOperator op = op_diver(a, b, c);
          const cplx x = s["x"];
          const double zero_res = relative_residual(
              op, [&](cplx t) { return integral_solution(ExpansionPoint::zero, a, b, t, c); }, x);
          Evaluation ev{{zero_res, zero_res}, false};
          const InfinityKernel kernels[] = {InfinityKernel::shifted, InfinityKernel::exact};
          for (std::size_t k = 0; k < 2; ++k) {
            const double res = relative_residual(
                op,
                [&](cplx t) {
                  return integral_solution(ExpansionPoint::infinity, a, b, t, c, kernels[k]);
                },
                x);
            ev.residuals[k] = std::max(ev.residuals[k], res);
          }
          return ev;
        },
    });
  }
  for (int m = 2; m <= 3; ++m) {
    r.push_back({
        key("lemma31_doubling_", m),
        "integral solutions are stable when the starting contour node count doubles",
        "q in [q_min, q_max]; x in [q^0.9, q^0.1]; alpha_k, beta_k in [0.1, 1.5]",
        Tier::core,
        1e-11,
        {},
        {},
        [m](SampleRng& rng, const RunOptions& o) {
          return draw_until(
              rng, o,
              [m](SampleRng& g, const RunOptions& opt) {
                return draw_diver(g, m, opt.q_min, opt.q_max);
              },
              [m](const Sample& s) { return guard_diver(s, m); });
        },
        [m](const Sample& s, const QContext& ctx) {
          const QContext c = at(s, ctx);
          QSettings doubled = c.settings();
          doubled.contour_points *= 2;
          const QContext c2 = c.with_settings(doubled);
          const auto a = params(s, "alpha_", m - 1);
          const auto b = params(s, "beta_", m - 1);
          double worst = 0.0;
          for (ExpansionPoint p : {ExpansionPoint::zero, ExpansionPoint::infinity}) {
            worst = std::max(worst, rel_diff(integral_solution(p, a, b, s["x"], c),
                                             integral_solution(p, a, b, s["x"], c2)));
          }
          return single(worst);
        },
    });
  }
}

void add_structural(std::vector<IdentityCheck>& r) {
  r.push_back({
      "np_diagram",
      "Newton-Puiseux diagram: convex hull of {(k, l) : x^k has nonzero coefficient in a_l}",
      "q in [q_min, q_max]; alpha, beta in [0.1, 1.5]; compares the diagrams of the m = 2 "
      "divergent-series operator and of (T - q)(T + x^2) with hand-derived point sets and hulls",
      Tier::core,
      0.5,
      {},
      {},
      [](SampleRng& rng, const RunOptions& o) {
        Sample s;
        s.set("q", draw_q(rng, o)).set("alpha", exponent(rng)).set("beta", exponent(rng));
        return s;
      },
      [](const Sample& s, const QContext& ctx) {
        using Points = std::vector<std::pair<int, int>>;
        const QContext c = at(s, ctx);
        const cplx a[] = {s["alpha"]};
        const cplx b[] = {s["beta"]};
        const NPDiagram diver = newton_puiseux(op_diver(a, b, c));
        const NPDiagram gm1 = newton_puiseux(op_gm1(2, c));
        const bool ok =
            diver.points == Points{{0, 1}, {0, 2}, {1, 0}, {1, 1}} &&
            diver.hull == Points{{0, 1}, {1, 0}, {1, 1}, {0, 2}} &&
            diver.hull_vertices == Points{{0, 1}, {1, 0}} &&
            diver.slopes == std::vector<Rational>{{-1, 1}} &&
            gm1.points == Points{{0, 1}, {0, 2}, {2, 0}, {2, 1}} &&
            gm1.hull == Points{{0, 1}, {2, 0}, {2, 1}, {0, 2}} &&
            gm1.hull_vertices == Points{{0, 1}, {2, 0}} &&
            gm1.slopes == std::vector<Rational>{{-1, 2}};
        return single(ok ? 0.0 : 1.0);
      },
  });
}

// Off-axis samples: complex x, y with the same moduli as the core band.
// A residual that vanishes after flipping the sign of one side is a branch
// flip of a half-integer power, classified separately.
Sample draw_offaxis(SampleRng& rng, const RunOptions& o) {
  Sample s;
  const double q = draw_q(rng, o);
  const double pi = std::numbers::pi;
  s.set("q", q);
  s.set("x", std::polar(band(rng, q), rng.uniform(-pi, pi)));
  s.set("y", std::polar(band(rng, q), rng.uniform(-pi, pi)));
  return s;
}

Evaluation classify(cplx lhs, cplx rhs, double threshold) {
  const double direct = rel_diff(lhs, rhs);
  if (!(direct < threshold) && rel_diff(lhs, -rhs) < threshold) return Evaluation{{0.0}, true};
  return single(direct);
}

void add_branch(std::vector<IdentityCheck>& r) {
  auto guard = [](const Sample& s) {
    const cplx q = s["q"];
    return off(s["x"], q) && off(s["y"], q);
  };
  r.push_back({
      "mu_inversion_offaxis",
      "mu(x, y) = mu(1/x, 1/y) for complex x, y",
      "q in [q_min, q_max]; |x|, |y| in [q^0.9, q^0.1]; arguments uniform in [-pi, pi]",
      Tier::branch_sensitive,
      1e-9,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_offaxis, guard); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return classify(mu(s["x"], s["y"], c), mu(1.0 / s["x"], 1.0 / s["y"], c), 1e-9);
      },
  });
  r.push_back({
      "zwegers_Z_offaxis",
      "A_2(x, -y) = sum_{k<2} -i q^{1/4} x^k theta_{q^2}(-y q^k) (y q^k)^{-1/2} "
      "mu(x^2, y q^k; q^2) for complex x, y",
      "q in [q_min, q_max]; |x|, |y| in [q^0.9, q^0.1]; arguments uniform in [-pi, pi]",
      Tier::branch_sensitive,
      1e-9,
      {},
      {},
      [=](SampleRng& rng, const RunOptions& o) { return draw_until(rng, o, draw_offaxis, guard); },
      [](const Sample& s, const QContext& ctx) {
        const QContext c = at(s, ctx);
        return classify(appell_A(2, s["x"], -s["y"], c), appell_A_from_mu(2, s["x"], s["y"], c),
                        1e-9);
      },
  });
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> r;
  add_theta(r);
  add_mu(r);
  add_kang(r);
  add_appell(r);
  add_linear_eq(r);
  add_corollaries(r);
  add_transforms(r);
  add_lemma(r);
  add_structural(r);
  add_branch(r);
  return r;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

}  // namespace mockq
