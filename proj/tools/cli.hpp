// The mockq command-line front end as a callable, so tests can drive it
// in-process. Exit codes: 0 ok, 2 usage or parse error, 3 domain or pole
// error, 4 a requested core-tier check failed.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mockq/numeric.hpp"

namespace mockq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitCheckFailed = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i", with optional exponents
/// ("1e-3-2.5e-1i"). Throws std::invalid_argument otherwise.
cplx parse_complex(const std::string& text);
/// Comma-separated list of complex literals.
std::vector<cplx> parse_complex_list(const std::string& text);

/// Shortest decimal text that reads back to exactly `v`.
std::string format_double(double v);
/// "re", "re+imi" or "re-imi" with round-trip precision.
std::string format_complex(cplx z);

}  // namespace mockq::cli
