#include "mockq/report_json.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "mockq/errors.hpp"

namespace mockq {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
  // JSON has no infinities; a non-finite residual becomes null.
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double read_number(const ordered_json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

ordered_json complex_value(cplx z) {
  if (z.imag() == 0.0) return number(z.real());
  return ordered_json{{"re", number(z.real())}, {"im", number(z.imag())}};
}

cplx read_complex(const ordered_json& j) {
  if (j.is_object()) return {read_number(j.at("re")), read_number(j.at("im"))};
  return {read_number(j), 0.0};
}

Tier read_tier(const std::string& s) {
  if (s == "core") return Tier::core;
  if (s == "branch_sensitive") return Tier::branch_sensitive;
  throw Error("unknown tier '" + s + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string report_to_json(const Report& r, bool include_timing) {
  ordered_json j;
  j["name"] = r.name;
  j["tier"] = to_string(r.tier);
  j["n_samples"] = r.n_samples;
  j["seed"] = r.seed;
  j["threshold"] = r.threshold;
  j["max_residual"] = number(r.max_residual);
  j["mean_residual"] = number(r.mean_residual);
  j["pass"] = r.pass;
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : f.sample.params) params[k] = complex_value(v);
    ordered_json entry{{"params", params}, {"residual", number(f.residual)}};
    if (!f.diagnostic.empty()) entry["diagnostic"] = f.diagnostic;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  if (r.resolved_base) j["resolved_base"] = *r.resolved_base;
  if (r.resolved_form) j["resolved_form"] = *r.resolved_form;
  if (!r.candidates.empty()) {
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.candidates) {
      cands.push_back({{"label", c.label},
                       {"max_residual", number(c.max_residual)},
                       {"mean_residual", number(c.mean_residual)},
                       {"pass", c.pass}});
    }
    j["candidates"] = std::move(cands);
  }
  if (r.tier == Tier::branch_sensitive) j["branch_flips"] = r.branch_flips;
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
  Report r;
  try {
    r.name = j.at("name").get<std::string>();
    r.tier = read_tier(j.value("tier", std::string("core")));
    r.n_samples = j.at("n_samples").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.threshold = j.value("threshold", 0.0);
    r.max_residual = read_number(j.at("max_residual"));
    r.mean_residual = read_number(j.at("mean_residual"));
    r.pass = j.at("pass").get<bool>();
    for (const auto& f : j.at("failures")) {
      Failure failure;
      for (const auto& [k, v] : f.at("params").items()) failure.sample.set(k, read_complex(v));
      failure.residual = read_number(f.at("residual"));
      failure.diagnostic = f.value("diagnostic", std::string{});
      r.failures.push_back(std::move(failure));
    }
    if (j.contains("wall_time_ms")) r.wall_time_ms = j["wall_time_ms"].get<double>();
    if (j.contains("resolved_base")) r.resolved_base = j["resolved_base"].get<std::string>();
    if (j.contains("resolved_form")) r.resolved_form = j["resolved_form"].get<std::string>();
    if (j.contains("candidates")) {
      for (const auto& c : j["candidates"]) {
        r.candidates.push_back({c.at("label").get<std::string>(), read_number(c.at("max_residual")),
                                read_number(c.at("mean_residual")), c.at("pass").get<bool>()});
      }
    }
    r.branch_flips = j.value("branch_flips", 0);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("report JSON has the wrong shape: ") + e.what());
  }
  return r;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report_csv_header() {
  return "name,tier,n_samples,seed,threshold,max_residual,mean_residual,pass,n_failures,"
         "resolved,branch_flips,wall_time_ms";
}

std::string report_to_csv_row(const Report& r, bool include_timing) {
  std::string resolved;
  if (r.resolved_base) resolved = *r.resolved_base;
  if (r.resolved_form) resolved = *r.resolved_form;
  std::ostringstream out;
  out << csv_field(r.name) << ',' << to_string(r.tier) << ',' << r.n_samples << ',' << r.seed << ','
      << format_double(r.threshold) << ',' << format_double(r.max_residual) << ','
      << format_double(r.mean_residual) << ',' << (r.pass ? "true" : "false") << ','
      << r.failures.size() << ',' << csv_field(resolved) << ',' << r.branch_flips << ',';
  if (include_timing) out << format_double(r.wall_time_ms);
  return out.str();
}

}  // namespace mockq
