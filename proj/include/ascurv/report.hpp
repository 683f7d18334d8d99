#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ascurv/theorem_checks.hpp"

namespace ascurv {

enum class OutputFormat { table, json };

OutputFormat parse_output_format(const std::string& name);

/// Run parameters echoed into reports. Thread count is not one of them.
struct ReportContext {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

nlohmann::json report_to_json(const TheoremReport& report, const ReportContext& ctx);

/// Fixed-width text: a summary line, then one row per entry.
std::string report_to_table(const TheoremReport& report, const ReportContext& ctx);

std::string render_report(const TheoremReport& report, const ReportContext& ctx, OutputFormat format);

/// printf-style "%.*g".
std::string format_double(double x, int precision = 10);

}  // namespace ascurv
