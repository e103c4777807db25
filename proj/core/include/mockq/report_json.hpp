#pragma once

#include <string>
#include <vector>

#include "mockq/verify.hpp"

namespace mockq {

/// {name, n_samples, seed, max_residual, mean_residual, pass,
///  failures: [{params: {...}, residual}], wall_time_ms?, resolved_base?, ...}
/// Complex parameters serialize as numbers when real, else {"re", "im"}.
/// wall_time_ms is written only when include_timing is set.
std::string report_to_json(const Report& report, bool include_timing = false);
Report report_from_json(const std::string& text);

std::string report_csv_header();
std::string report_to_csv_row(const Report& report, bool include_timing = false);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& field);

}  // namespace mockq
