#include "mockq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "mockq/errors.hpp"

namespace mockq {

std::string to_string(Tier tier) {
  return tier == Tier::core ? "core" : "branch_sensitive";
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct SampleOutcome {
  Sample sample;
  std::vector<double> residuals;
  bool branch_flip = false;
  std::string diagnostic;
};

SampleOutcome run_sample(const IdentityCheck& check, std::size_t n_candidates, std::uint64_t seed,
                         const QContext& ctx, const RunOptions& options) {
  SampleOutcome out;
  out.residuals.assign(n_candidates, std::numeric_limits<double>::infinity());
  try {
    SampleRng rng(seed);
    out.sample = check.draw(rng, options);
    Evaluation ev = check.evaluate(out.sample, ctx);
    if (ev.residuals.size() != n_candidates) {
      throw Error("check '" + check.name + "' returned the wrong number of residuals");
    }
    for (std::size_t c = 0; c < n_candidates; ++c) {
      double r = ev.residuals[c];
      out.residuals[c] = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
    }
    out.branch_flip = ev.branch_flip;
  } catch (const std::exception& e) {
    out.diagnostic = e.what();
  }
  return out;
}

double finite_mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return pairwise_sum(values) / static_cast<double>(values.size());
}

}  // namespace

std::uint64_t SampleRng::next() { return splitmix64(state_); }

double SampleRng::uniform(double lo, double hi) {
  double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::uint64_t sample_seed(std::uint64_t seed, const std::string& name, std::uint64_t index) {
  std::uint64_t state = seed ^ fnv1a(name);
  std::uint64_t base = splitmix64(state);
  state = base + index;
  return splitmix64(state);
}

cplx Sample::operator[](const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  throw Error("sample has no parameter '" + key + "'");
}

Sample& Sample::set(std::string key, cplx value) {
  for (auto& [k, v] : params) {
    if (k == key) {
      v = value;
      return *this;
    }
  }
  params.emplace_back(std::move(key), value);
  return *this;
}

const IdentityCheck* find_check(const std::string& name) {
  for (const auto& check : registry()) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

Report run_check(const std::string& name, int n_samples, const QContext& ctx,
                 const RunOptions& options) {
  const IdentityCheck* check = find_check(name);
  if (check == nullptr) throw UnknownCheckError("unknown check '" + name + "'");
  return run_check(*check, n_samples, ctx, options);
}

Report run_check(const IdentityCheck& check, int n_samples, const QContext& ctx,
                 const RunOptions& options) {
  if (n_samples < 1) throw DomainError("n_samples must be positive");
  if (!(options.q_min > 0.0) || !(options.q_min <= options.q_max) || !(options.q_max < 1.0)) {
    throw DomainError("sampling range for q must satisfy 0 < q_min <= q_max < 1");
  }
  auto start = std::chrono::steady_clock::now();

  const std::size_t n_candidates = std::max<std::size_t>(1, check.candidates.size());
  const auto n = static_cast<std::size_t>(n_samples);
  std::vector<SampleOutcome> outcomes(n);

  unsigned threads = static_cast<unsigned>(std::clamp(options.threads, 1, 64));
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      outcomes[i] = run_sample(check, n_candidates, sample_seed(ctx.seed(), check.name, i), ctx,
                               options);
    }
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  Report report;
  report.name = check.name;
  report.tier = check.tier;
  report.n_samples = n_samples;
  report.seed = ctx.seed();
  report.threshold = check.threshold;

  // Flipped samples are classified separately and excluded from the residual
  // statistics of every candidate.
  for (const auto& o : outcomes) {
    if (o.branch_flip) ++report.branch_flips;
  }

  std::size_t adopted = 0;
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t c = 0; c < n_candidates; ++c) {
    std::vector<double> values;
    for (const auto& o : outcomes) {
      if (!o.branch_flip) values.push_back(o.residuals[c]);
    }
    CandidateSummary summary;
    summary.label = check.candidates.empty() ? std::string{} : check.candidates[c];
    summary.max_residual = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    summary.mean_residual = finite_mean(values);
    summary.pass = summary.max_residual < check.threshold;
    if (!found && summary.pass) {
      adopted = c;
      found = true;
    }
    if (!found && summary.max_residual < best) {
      best = summary.max_residual;
      adopted = c;
    }
    if (!check.candidates.empty()) report.candidates.push_back(summary);
  }

  std::vector<double> values;
  for (const auto& o : outcomes) {
    if (o.branch_flip) continue;
    double r = o.residuals[adopted];
    values.push_back(r);
    if (!(r < check.threshold)) {
      report.failures.push_back({o.sample, r, o.diagnostic});
    }
  }
  report.max_residual = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  report.mean_residual = finite_mean(values);
  report.pass = report.max_residual < check.threshold;

  if (!check.candidates.empty()) {
    const std::string& label = check.candidates[adopted];
    if (check.resolution_key == "resolved_base") {
      report.resolved_base = label;
    } else {
      report.resolved_form = label;
    }
  }

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> run_all(int n_samples, const QContext& ctx, const RunOptions& options) {
  std::vector<Report> reports;
  reports.reserve(registry().size());
  for (const auto& check : registry()) {
    reports.push_back(run_check(check, n_samples, ctx, options));
  }
  return reports;
}

bool core_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.tier != Tier::core || r.pass; });
}

}  // namespace mockq
