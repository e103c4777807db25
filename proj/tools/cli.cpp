#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mockq/errors.hpp"
#include "mockq/mock.hpp"
#include "mockq/qseries.hpp"
#include "mockq/report_json.hpp"
#include "mockq/transforms.hpp"
#include "mockq/verify.hpp"

namespace mockq::cli {

namespace {

using nlohmann::ordered_json;

// Raised for malformed or missing parameters; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  return v;
}

const std::vector<std::string> kParamNames = {"q",     "x",     "y",    "lambda", "m",
                                              "alpha", "beta",  "nu",   "n",      "num",
                                              "den",   "z",     "mode", "point",  "radius",
                                              "base",  "order", "index"};

const std::vector<std::string> kFunctions = {
    "theta", "qpoch", "qhyper",   "mu",       "appell",             "G",
    "g2",    "g3",    "g2_lerch", "g3_lerch", "laplace_minus_demo", "integral_solution",
    "formal_solution"};

class Params {
 public:
  std::map<std::string, std::string> raw;

  bool has(const std::string& key) const { return raw.count(key) != 0; }

  const std::string& text(const std::string& key) const {
    auto it = raw.find(key);
    if (it == raw.end()) throw UsageError("missing required parameter --" + key);
    return it->second;
  }

  cplx complex(const std::string& key) const {
    try {
      return parse_complex(text(key));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--" + key + ": " + e.what());
    }
  }

  cplx complex_or(const std::string& key, cplx fallback) const {
    return has(key) ? complex(key) : fallback;
  }

  double real(const std::string& key) const {
    const cplx z = complex(key);
    if (z.imag() != 0.0) throw UsageError("--" + key + " must be real");
    return z.real();
  }

  int integer(const std::string& key) const {
    const double v = real(key);
    if (v != std::floor(v) || std::abs(v) > 1e6) throw UsageError("--" + key + " must be an integer");
    return static_cast<int>(v);
  }

  std::vector<cplx> list(const std::string& key) const {
    if (!has(key)) return {};
    try {
      return parse_complex_list(text(key));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--" + key + ": " + e.what());
    }
  }
};

QContext make_context(const Params& p, const QSettings& settings) {
  const cplx q = p.complex("q");
  if (!(std::abs(q) < 1.0)) throw UsageError("--q must satisfy |q| < 1");
  try {
    return QContext(q, settings);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

ExpansionPoint parse_point(const Params& p) {
  const std::string point = p.has("point") ? p.text("point") : "zero";
  if (point == "zero" || point == "0") return ExpansionPoint::zero;
  if (point == "infinity" || point == "inf") return ExpansionPoint::infinity;
  throw UsageError("--point must be zero or infinity");
}

struct EvalResult {
  cplx value;
  std::optional<PuiseuxSeries> series;
};

EvalResult evaluate(const std::string& fn, const Params& p, const QSettings& settings) {
  QContext ctx = make_context(p, settings);
  if (fn == "theta") {
    ThetaMode mode = ThetaMode::sum;
    if (p.has("mode")) {
      if (p.text("mode") == "product") {
        mode = ThetaMode::product;
      } else if (p.text("mode") != "sum") {
        throw UsageError("--mode must be sum or product");
      }
    }
    if (p.has("base")) ctx = ctx.with_nome(p.complex("base"));
    return {theta(p.complex("x"), ctx, mode), {}};
  }
  if (fn == "qpoch") {
    if (p.has("n")) return {qpoch_finite(p.complex("x"), p.integer("n"), ctx), {}};
    if (p.has("nu")) return {qpoch_nu(p.complex("x"), p.complex("nu"), ctx), {}};
    return {qpoch_inf(p.complex("x"), ctx), {}};
  }
  if (fn == "qhyper") {
    return {qhyper(p.list("num"), p.list("den"), p.complex("z"), ctx), {}};
  }
  if (fn == "mu") {
    return {mu(MuArgs{p.complex("x"), p.complex("y"), p.complex_or("base", ctx.q())}, ctx), {}};
  }
  if (fn == "appell") return {appell_A(p.integer("m"), p.complex("x"), p.complex("y"), ctx), {}};
  if (fn == "G") return {appell_G(p.integer("m"), p.complex("x"), p.complex("y"), ctx), {}};
  if (fn == "g2") return {g2_series(p.complex("x"), ctx), {}};
  if (fn == "g3") return {g3_series(p.complex("x"), ctx), {}};
  if (fn == "g2_lerch") return {g2_lerch(p.complex("x"), ctx), {}};
  if (fn == "g3_lerch") return {g3_lerch(p.complex("x"), ctx), {}};
  if (fn == "laplace_minus_demo") {
    // L^-(xi -> 1/(1 - y xi))(x) = sum_{n>=0} (xy)^n q^{n(n-1)/2}.
    const cplx y = p.complex("y");
    const double r = p.has("radius") ? p.real("radius") : 1.0;
    if (!(std::abs(y) * r < 1.0))
      throw DomainError("laplace_minus_demo needs |y| * radius < 1 (pole of 1/(1 - y xi))");
    const ComplexFn f = [y](cplx xi) { return 1.0 / (1.0 - y * xi); };
    return {laplace_minus(f, p.complex("x"), r, ctx), {}};
  }
  if (fn == "integral_solution") {
    if (p.has("radius")) {
      QSettings s = ctx.settings();
      s.contour_radius = p.real("radius");
      ctx = ctx.with_settings(s);
    }
    const auto a = p.list("alpha");
    const auto b = p.list("beta");
    return {integral_solution(parse_point(p), a, b, p.complex("x"), ctx), {}};
  }
  if (fn == "formal_solution") {
    const auto a = p.list("alpha");
    const auto b = p.list("beta");
    const int index = p.has("index") ? p.integer("index") : 0;
    const int order = p.has("order") ? p.integer("order") : 10;
    PuiseuxSeries s = formal_solution(parse_point(p), index, a, b, order, ctx);
    const cplx value = p.has("x") ? s.evaluate(p.complex("x")) : cplx{};
    return {value, std::move(s)};
  }
  throw UsageError("unknown function '" + fn + "'");
}

ordered_json json_complex(cplx z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void check_format(const std::string& format) {
  if (format != "text" && format != "json" && format != "csv")
    throw UsageError("--format must be text, json or csv");
}

void emit_eval(std::ostream& os, const std::string& fn, const Params& p, const EvalResult& r,
               const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["function"] = fn;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : p.raw) params[k] = v;
    j["params"] = params;
    j["value"] = json_complex(r.value);
    if (r.series) {
      j["point"] = r.series->point == ExpansionPoint::zero ? "zero" : "infinity";
      j["exponent"] = json_complex(r.series->exponent);
      ordered_json coeffs = ordered_json::array();
      for (cplx c : r.series->coeffs) coeffs.push_back(json_complex(c));
      j["coefficients"] = coeffs;
    }
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    if (r.series) {
      os << "n,re,im\n";
      for (std::size_t n = 0; n < r.series->coeffs.size(); ++n)
        os << n << ',' << format_double(r.series->coeffs[n].real()) << ','
           << format_double(r.series->coeffs[n].imag()) << '\n';
    } else {
      os << "function,re,im\n"
         << csv_field(fn) << ',' << format_double(r.value.real()) << ','
         << format_double(r.value.imag()) << '\n';
    }
  } else {
    if (r.series) {
      os << "exponent " << format_complex(r.series->exponent) << '\n';
      for (std::size_t n = 0; n < r.series->coeffs.size(); ++n)
        os << "c[" << n << "] " << format_complex(r.series->coeffs[n]) << '\n';
      if (p.has("x")) os << "value " << format_complex(r.value) << '\n';
    } else {
      os << format_complex(r.value) << '\n';
    }
  }
}

void emit_reports(std::ostream& os, const std::vector<Report>& reports, const std::string& format,
                  bool timing, bool as_array) {
  if (format == "json") {
    if (!as_array) {
      os << report_to_json(reports.front(), timing) << '\n';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      os << report_to_json(reports[i], timing) << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "]\n";
  } else if (format == "csv") {
    os << report_csv_header() << '\n';
    for (const auto& r : reports) os << report_to_csv_row(r, timing) << '\n';
  } else {
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.name << "  max=" << format_double(r.max_residual)
         << "  mean=" << format_double(r.mean_residual) << "  threshold="
         << format_double(r.threshold) << "  failures=" << r.failures.size();
      if (r.resolved_base) os << "  resolved_base=" << *r.resolved_base;
      if (r.resolved_form) os << "  resolved_form=" << *r.resolved_form;
      if (r.tier == Tier::branch_sensitive)
        os << "  tier=branch_sensitive  branch_flips=" << r.branch_flips;
      if (timing) os << "  wall_time_ms=" << format_double(r.wall_time_ms);
      os << '\n';
      for (const auto& f : r.failures) {
        if (!f.diagnostic.empty()) os << "    error: " << f.diagnostic << '\n';
      }
    }
  }
}

std::vector<Report> read_reports(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(buffer.str());
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed report file: ") + e.what());
  }
  std::vector<Report> reports;
  try {
    if (j.is_array()) {
      for (const auto& item : j) reports.push_back(report_from_json(item.dump()));
    } else {
      reports.push_back(report_from_json(j.dump()));
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return reports;
}

}  // namespace

cplx parse_complex(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s), 0.0};

  s.pop_back();
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  const double re = re_text.empty() ? 0.0 : parse_real(re_text);
  return {re, parse_real(im_text)};
}

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  if (!std::signbit(z.imag())) out += '+';
  return out + format_double(z.imag()) + "i";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"mockq: q-series, mock theta functions and q-difference equations"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string format = "text";
  std::string output_path;
  QSettings settings;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text, json or csv")->capture_default_str();
    sub->add_option("-o,--output", output_path, "Write to this file instead of stdout");
  };
  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--tol", settings.tol, "Truncation tolerance")->capture_default_str();
    sub->add_option("--max-terms", settings.max_terms, "Truncation limit")->capture_default_str();
    sub->add_option("--contour-points", settings.contour_points, "Initial contour nodes")
        ->capture_default_str();
  };

  std::map<std::string, std::string> eval_raw;
  std::map<std::string, std::string> sweep_raw;
  auto add_params = [](CLI::App* sub, std::map<std::string, std::string>& raw) {
    for (const auto& name : kParamNames) {
      std::string help = "Parameter " + name;
      if (name == "mode") help += ": sum or product";
      else if (name == "point") help += ": zero or infinity";
      else if (name == "alpha" || name == "beta" || name == "num" || name == "den")
        help += " (comma-separated complex list)";
      else if (name == "m" || name == "n" || name == "order" || name == "index")
        help += " (integer)";
      else
        help += " (complex literal a+bi)";
      sub->add_option("--" + name, raw[name], help);
    }
  };
  auto collect = [](CLI::App* sub, const std::map<std::string, std::string>& raw) {
    Params p;
    for (const auto& [name, value] : raw)
      if (sub->count("--" + name) > 0) p.raw[name] = value;
    return p;
  };

  std::string function;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a function");
  eval->add_option("function", function, "Function name")->required();
  add_params(eval, eval_raw);
  add_common(eval);
  add_numeric(eval);

  std::string check_name;
  bool all = false;
  int n_samples = 50;
  bool timing = false;
  RunOptions run_options;
  CLI::App* check = app.add_subcommand("check", "Run identity checks");
  check->add_option("name", check_name, "Check name");
  check->add_flag("--all", all, "Run the whole registry");
  check->add_option("-n,--samples", n_samples, "Samples per check")->capture_default_str();
  check->add_option("--seed", settings.seed, "Run seed")->capture_default_str();
  check->add_option("--threads", run_options.threads, "Worker threads")->capture_default_str();
  check->add_option("--q-min", run_options.q_min, "Smallest sampled q")->capture_default_str();
  check->add_option("--q-max", run_options.q_max, "Largest sampled q")->capture_default_str();
  check->add_flag("--timing", timing, "Include wall_time_ms (output is then not reproducible)");
  add_common(check);
  add_numeric(check);

  CLI::App* list = app.add_subcommand("list", "List registered checks");
  add_common(list);

  std::string vary;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a function along a parameter range");
  sweep->add_option("function", function, "Function name")->required();
  sweep->add_option("--vary", vary, "Real parameter to vary")->required();
  sweep->add_option("--from", from, "First value")->required();
  sweep->add_option("--to", to, "Last value")->required();
  sweep->add_option("--steps", steps, "Number of rows")->required();
  add_params(sweep, sweep_raw);
  add_common(sweep);
  add_numeric(sweep);

  std::string input_path;
  CLI::App* report = app.add_subcommand("report", "Summarize a saved JSON report");
  report->add_option("input", input_path, "Report file written by check --format json")->required();
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    check_format(format);

    if (*eval) {
      const Params p = collect(eval, eval_raw);
      const EvalResult r = evaluate(function, p, settings);
      Output o(out, output_path);
      emit_eval(o.get(), function, p, r, format);
      return kExitOk;
    }

    if (*check) {
      if (all == !check_name.empty()) throw UsageError("give either a check name or --all");
      if (n_samples < 1) throw UsageError("-n must be positive");
      const QContext ctx = [&] {
        try {
          return QContext(0.5, settings);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }();
      std::vector<Report> reports;
      try {
        reports = all ? run_all(n_samples, ctx, run_options)
                      : std::vector<Report>{run_check(check_name, n_samples, ctx, run_options)};
      } catch (const UnknownCheckError& e) {
        throw UsageError(e.what());
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      Output o(out, output_path);
      emit_reports(o.get(), reports, format, timing, all);
      return core_passed(reports) ? kExitOk : kExitCheckFailed;
    }

    if (*list) {
      Output o(out, output_path);
      std::ostream& os = o.get();
      if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& c : registry()) {
          j.push_back({{"name", c.name},
                       {"tier", to_string(c.tier)},
                       {"threshold", c.threshold},
                       {"anchor", c.anchor},
                       {"sampler", c.sampler},
                       {"candidates", c.candidates}});
        }
        os << j.dump(2) << '\n';
      } else if (format == "csv") {
        os << "name,tier,threshold,anchor,sampler\n";
        for (const auto& c : registry())
          os << csv_field(c.name) << ',' << to_string(c.tier) << ',' << format_double(c.threshold)
             << ',' << csv_field(c.anchor) << ',' << csv_field(c.sampler) << '\n';
      } else {
        for (const auto& c : registry())
          os << c.name << "  [" << to_string(c.tier) << ", " << format_double(c.threshold)
             << "]  " << c.anchor << '\n';
      }
      return kExitOk;
    }

    if (*sweep) {
      if (steps < 1) throw UsageError("--steps must be at least 1");
      if (!std::isfinite(from) || !std::isfinite(to)) throw UsageError("bad sweep range");
      if (std::find(kParamNames.begin(), kParamNames.end(), vary) == kParamNames.end())
        throw UsageError("unknown sweep parameter '" + vary + "'");
      if (std::find(kFunctions.begin(), kFunctions.end(), function) == kFunctions.end())
        throw UsageError("unknown function '" + function + "'");
      Params base = collect(sweep, sweep_raw);
      Output o(out, output_path);
      std::ostream& os = o.get();
      ordered_json rows = ordered_json::array();
      if (format == "csv") os << vary << ",re,im,error\n";
      for (int k = 0; k < steps; ++k) {
        const double v = steps == 1 ? from : from + (to - from) * k / (steps - 1);
        Params p = base;
        p.raw[vary] = format_double(v);
        std::optional<cplx> value;
        std::string error;
        try {
          value = evaluate(function, p, settings).value;
        } catch (const UsageError&) {
          throw;
        } catch (const Error& e) {
          error = e.what();
        }
        if (format == "json") {
          ordered_json row{{vary, v}};
          if (value) {
            row["re"] = value->real();
            row["im"] = value->imag();
          } else {
            row["error"] = error;
          }
          rows.push_back(row);
        } else if (format == "csv") {
          os << format_double(v) << ',';
          if (value) os << format_double(value->real()) << ',' << format_double(value->imag());
          else os << ',';
          os << ',' << csv_field(error) << '\n';
        } else {
          os << vary << '=' << format_double(v) << "  ";
          if (value) os << format_complex(*value) << '\n';
          else os << "error: " << error << '\n';
        }
      }
      if (format == "json") os << rows.dump(2) << '\n';
      return kExitOk;
    }

    if (*report) {
      const std::vector<Report> reports = read_reports(input_path);
      Output o(out, output_path);
      emit_reports(o.get(), reports, format, false, reports.size() != 1);
      return core_passed(reports) ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("mockq");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mockq::cli
