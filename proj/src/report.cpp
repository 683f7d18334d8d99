#include "ascurv/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ascurv {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") {
        return OutputFormat::table;
    }
    if (name == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("unknown format '" + name + "' (expected table or json)");
}

std::string format_double(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

json report_to_json(const TheoremReport& report, const ReportContext& ctx) {
    json j;
    j["check"] = report.name;
    j["pass"] = report.pass;
    j["lhs"] = report.lhs;
    j["lhs_std_error"] = report.lhs_std_error;
    j["rhs"] = report.rhs;
    j["rhs_exact"] = report.rhs_exact ? json(report.rhs_exact->to_fraction_string()) : json(nullptr);
    j["residual"] = report.residual;
    j["std_error"] = report.std_error;
    j["z"] = report.z;
    j["samples"] = ctx.samples;
    j["seed"] = ctx.seed;
    json entries = json::array();
    for (const ReportEntry& e : report.entries) {
        json row;
        row["simplex"] = e.label;
        row["kind"] = e.kind;
        row["lhs"] = e.lhs;
        row["rhs"] = e.rhs ? json(*e.rhs) : json(nullptr);
        row["residual"] = e.residual;
        row["std_error"] = e.std_error;
        row["exact"] = e.exact;
        row["pass"] = e.pass ? json(*e.pass) : json(nullptr);
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    j["notes"] = report.notes;
    return j;
}

std::string report_to_table(const TheoremReport& report, const ReportContext& ctx) {
    std::ostringstream out;
    out << report.name << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
    out << "  lhs      " << format_double(report.lhs) << " +- " << format_double(report.lhs_std_error, 3) << "\n";
    out << "  rhs      " << format_double(report.rhs);
    if (report.rhs_exact) {
        out << " (" << report.rhs_exact->to_string() << ")";
    }
    out << "\n";
    out << "  residual " << format_double(report.residual) << " (z = " << format_double(report.z, 3) << ")\n";
    out << "  samples  " << ctx.samples << ", seed " << ctx.seed << "\n";
    if (!report.entries.empty()) {
        char line[256];
        std::snprintf(line, sizeof line, "  %-28s %-11s %16s %16s %12s  %s\n", "simplex", "kind", "lhs", "rhs",
                      "std_error", "");
        out << line;
        for (const ReportEntry& e : report.entries) {
            const std::string rhs = e.rhs ? format_double(*e.rhs) : "-";
            const char* verdict = !e.pass ? "" : (*e.pass ? "ok" : "FAIL");
            std::snprintf(line, sizeof line, "  %-28s %-11s %16s %16s %12s  %s\n", e.label.c_str(), e.kind.c_str(),
                          format_double(e.lhs).c_str(), rhs.c_str(), format_double(e.std_error, 3).c_str(), verdict);
            out << line;
        }
    }
    for (const std::string& n : report.notes) {
        out << "  note: " << n << "\n";
    }
    return out.str();
}

std::string render_report(const TheoremReport& report, const ReportContext& ctx, OutputFormat format) {
    if (format == OutputFormat::json) {
        return report_to_json(report, ctx).dump(2) + "\n";
    }
    return report_to_table(report, ctx);
}

}  // namespace ascurv
