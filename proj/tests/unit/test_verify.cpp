#include <set>

#include "mockq/errors.hpp"
#include "mockq/report_json.hpp"
#include "mockq/verify.hpp"
#include "oracles.hpp"

using namespace mockq;

TEST_CASE("registry contents") {
  const auto& reg = registry();
  std::set<std::string> names;
  for (const auto& c : reg) {
    CHECK(names.insert(c.name).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK_FALSE(c.sampler.empty());
    CHECK(c.threshold > 0.0);
    if (!c.candidates.empty()) CHECK_FALSE(c.resolution_key.empty());
  }
  for (const char* required :
       {"theta_shift", "mu_symmetry", "mu_shift", "mu_translation", "a1_mu", "kang_g2", "kang_g3",
        "zwegers_Z_1", "zwegers_Z_2", "zwegers_Z_3", "gm_mu_1", "gm_mu_2", "gm_mu_3",
        "gm_pseudoperiod_1", "gm_pseudoperiod_4", "thm11_2", "thm11_3", "thm11_4", "thm12_1",
        "thm12_2", "thm12_3", "corA_2", "corB_2", "corC_2", "corD_2", "corE_2", "corA_3", "corB_3",
        "corC_3", "corD_3", "corE_3", "lerch_g2", "lerch_g3", "borel_laplace_mu", "bl_commutation",
        "lemma31_formal_2", "lemma31_formal_3", "lemma31_integral_2", "lemma31_integral_3",
        "np_diagram"}) {
    CHECK_MESSAGE(find_check(required) != nullptr, required);
  }
  CHECK(find_check("no_such") == nullptr);
}

TEST_CASE("run_check: examples") {
  const QContext ctx(0.3);
  const Report mu = run_check("mu_symmetry", 50, ctx);
  CHECK(mu.pass);
  CHECK(mu.max_residual < 1e-9);
  CHECK(mu.n_samples == 50);
  const Report t = run_check("thm12_2", 50, ctx);
  CHECK(t.pass);
  CHECK(t.max_residual < 1e-8);
  CHECK_THROWS_AS(run_check("no_such", 5, ctx), UnknownCheckError);
  CHECK_THROWS_AS(run_check("mu_symmetry", 0, ctx), DomainError);
}

TEST_CASE("pass and failures agree with the threshold") {
  const QContext ctx(0.3);
  IdentityCheck c;
  c.name = "synthetic";
  c.anchor = "r = u";
  c.sampler = "u in [0, 1)";
  c.threshold = 0.5;
  c.draw = [](SampleRng& rng, const RunOptions&) {
    Sample s;
    s.set("u", rng.uniform(0.0, 1.0));
    return s;
  };
  c.evaluate = [](const Sample& s, const QContext&) { return Evaluation{{s["u"].real()}, false}; };
  const Report r = run_check(c, 200, ctx);
  int above = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    SampleRng rng(sample_seed(ctx.seed(), "synthetic", i));
    const double u = rng.uniform(0.0, 1.0);
    worst = std::max(worst, u);
    if (!(u < 0.5)) ++above;
  }
  CHECK(r.max_residual == worst);
  CHECK(static_cast<int>(r.failures.size()) == above);
  CHECK(r.pass == (worst < 0.5));
  for (const auto& f : r.failures) CHECK(f.residual >= 0.5);
}

TEST_CASE("evaluation errors become failures with a diagnostic") {
  const QContext ctx(0.3);
  IdentityCheck c;
  c.name = "throws";
  c.anchor = "-";
  c.sampler = "-";
  c.draw = [](SampleRng&, const RunOptions&) { return Sample{}; };
  c.evaluate = [](const Sample&, const QContext&) -> Evaluation { throw PoleError("boom"); };
  const Report r = run_check(c, 3, ctx);
  CHECK_FALSE(r.pass);
  REQUIRE(r.failures.size() == 3);
  CHECK(r.failures[0].diagnostic == "boom");
}

TEST_CASE("candidate adoption") {
  const QContext ctx(0.3);
  IdentityCheck c;
  c.name = "dual";
  c.anchor = "-";
  c.sampler = "-";
  c.threshold = 1e-9;
  c.candidates = {"first", "other"};
  c.resolution_key = "resolved_base";
  c.draw = [](SampleRng&, const RunOptions&) { return Sample{}; };
  c.evaluate = [](const Sample&, const QContext&) { return Evaluation{{0.3, 1e-15}, false}; };
  Report r = run_check(c, 4, ctx);
  CHECK(r.pass);
  REQUIRE(r.resolved_base.has_value());
  CHECK(*r.resolved_base == "other");
  REQUIRE(r.candidates.size() == 2);
  CHECK_FALSE(r.candidates[0].pass);

  // When both pass the first form is kept.
  c.evaluate = [](const Sample&, const QContext&) { return Evaluation{{1e-12, 1e-15}, false}; };
  r = run_check(c, 4, ctx);
  CHECK(*r.resolved_base == "first");
}

TEST_CASE("kang_g3 records the resolved base") {
  const Report r = run_check("kang_g3", 20, QContext(0.3));
  CHECK(r.pass);
  REQUIRE(r.resolved_base.has_value());
  CHECK(*r.resolved_base == "q^3");
}

TEST_CASE("determinism across runs and thread counts") {
  const QContext ctx(0.3, QSettings{.seed = 11});
  for (const char* name : {"mu_translation", "thm11_3", "lemma31_integral_2", "bl_commutation"}) {
    const Report a = run_check(name, 12, ctx, RunOptions{.threads = 1});
    const Report b = run_check(name, 12, ctx, RunOptions{.threads = 4});
    const Report c = run_check(name, 12, ctx, RunOptions{.threads = 1});
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_json(a) == report_to_json(c));
  }
  const Report s1 = run_check("mu_shift", 10, QContext(0.3, QSettings{.seed = 1}));
  const Report s2 = run_check("mu_shift", 10, QContext(0.3, QSettings{.seed = 2}));
  CHECK(s1.mean_residual != s2.mean_residual);
}

TEST_CASE("run_all keeps registry order and n = 1 gives single samples") {
  const auto reports = run_all(1, QContext(0.3));
  REQUIRE(reports.size() == registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].name == registry()[i].name);
    CHECK(reports[i].n_samples == 1);
  }
}

TEST_CASE("branch-sensitive tier does not decide the core verdict") {
  Report core;
  core.pass = true;
  Report branch;
  branch.tier = Tier::branch_sensitive;
  branch.pass = false;
  CHECK(core_passed({core, branch}));
  core.pass = false;
  CHECK_FALSE(core_passed({core, branch}));
}
