// Registry of identity checks, deterministic guarded sampling, and reports.
//
// Every sample draws from its own generator seeded by (run seed, check name,
// sample index), so a report does not depend on how samples are scheduled
// across threads. Residuals are scale-free: relative differences for
// two-sided identities, relative gaps for vanishing sums, and operator
// residuals from relative_residual.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mockq/context.hpp"

namespace mockq {

enum class Tier { core, branch_sensitive };

std::string to_string(Tier tier);

/// splitmix64 stream with the handful of draws the samplers need.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

/// Seed of sample `index` of check `name` in a run seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, const std::string& name, std::uint64_t index);

struct RunOptions {
  double q_min = 0.05;
  double q_max = 0.5;
  int threads = 1;
};

struct Sample {
  std::vector<std::pair<std::string, cplx>> params;

  cplx operator[](const std::string& key) const;
  Sample& set(std::string key, cplx value);
};

/// One residual per candidate form (a single entry for ordinary checks).
struct Evaluation {
  std::vector<double> residuals;
  bool branch_flip = false;
};

struct IdentityCheck {
  std::string name;
  /// The identity being checked, written as a formula.
  std::string anchor;
  /// Parameter domain and guards.
  std::string sampler;
  Tier tier = Tier::core;
  double threshold = 1e-9;
  /// Labels of alternative forms, evaluated side by side. The first label
  /// whose worst residual is below threshold is adopted.
  std::vector<std::string> candidates;
  /// Report key naming the adopted candidate ("resolved_base" or "resolved_form").
  std::string resolution_key;
  std::function<Sample(SampleRng&, const RunOptions&)> draw;
  std::function<Evaluation(const Sample&, const QContext&)> evaluate;
};

struct Failure {
  Sample sample;
  double residual = 0.0;
  std::string diagnostic;
};

struct CandidateSummary {
  std::string label;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  bool pass = false;
};

struct Report {
  std::string name;
  Tier tier = Tier::core;
  int n_samples = 0;
  std::uint64_t seed = 0;
  double threshold = 0.0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  bool pass = false;
  std::vector<Failure> failures;
  double wall_time_ms = 0.0;
  std::optional<std::string> resolved_base;
  std::optional<std::string> resolved_form;
  std::vector<CandidateSummary> candidates;
  int branch_flips = 0;
};

/// The fixed registry, in report order.
const std::vector<IdentityCheck>& registry();
/// nullptr when absent.
const IdentityCheck* find_check(const std::string& name);

/// Throws UnknownCheckError for names outside the registry. Evaluation
/// errors are recorded as failures, not thrown.
Report run_check(const std::string& name, int n_samples, const QContext& ctx,
                 const RunOptions& options = {});
Report run_check(const IdentityCheck& check, int n_samples, const QContext& ctx,
                 const RunOptions& options = {});
std::vector<Report> run_all(int n_samples, const QContext& ctx, const RunOptions& options = {});

/// True when every core-tier report passed.
bool core_passed(const std::vector<Report>& reports);

}  // namespace mockq
