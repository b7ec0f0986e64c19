#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

namespace opfree::app {
namespace {

nlohmann::json number(double v) {
    // JSON has no infinities or NaN.
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

std::string digest(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

nlohmann::json report_json(const RunResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.report.checks)
        checks.push_back({{"name", c.name},
                          {"inputs", c.inputs},
                          {"inputs_digest", digest(c.inputs)},
                          {"value", number(c.value)},
                          {"threshold", number(c.threshold)},
                          {"status", to_string(c.status)},
                          {"note", c.note}});
    const auto& env = r.environment;
    return {{"schema_version", kSchemaVersion},
            {"kind", r.kind},
            {"suite", r.name},
            {"environment",
             {{"seed", env.seed},
              {"tolerance", env.tolerance},
              {"depth", env.depth ? nlohmann::json(*env.depth) : nlohmann::json(nullptr)},
              {"trials", env.trials}}},
            {"checks", checks},
            {"observations", r.report.observations},
            {"summary",
             {{"status", to_string(r.report.status())},
              {"pass", r.report.count(Status::Pass)},
              {"fail", r.report.count(Status::Fail)},
              {"inconclusive", r.report.count(Status::Inconclusive)}}},
            {"timing", {{"wall_time_s", r.wall_time_s}}}};
}

void print_table(const RunResult& r, std::ostream& out) {
    std::size_t width = 5;
    for (const auto& c : r.report.checks) width = std::max(width, c.name.size());
    const auto& env = r.environment;
    out << r.kind << " " << r.name << "  seed=" << env.seed << " tol=" << env.tolerance
        << " trials=" << env.trials;
    if (env.depth) out << " depth=" << *env.depth;
    out << "\n\n";
    out << std::left << std::setw(static_cast<int>(width)) << "check"
        << "  " << std::setw(12) << "status" << std::right << std::setw(14) << "value" << std::setw(14)
        << "threshold" << "  note\n";
    const auto flags = out.flags();
    for (const auto& c : r.report.checks) {
        out << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(12)
            << to_string(c.status) << std::right << std::setw(14) << std::setprecision(4) << std::scientific
            << c.value << std::setw(14) << c.threshold;
        out.flags(flags);
        out << "  " << c.note << "\n";
    }
    if (!r.report.observations.empty()) {
        out << "\nobservations:\n";
        for (const auto& o : r.report.observations) out << "  - " << o << "\n";
    }
    out << "\n" << to_string(r.report.status()) << ": " << r.report.count(Status::Pass) << " pass, "
        << r.report.count(Status::Fail) << " fail, " << r.report.count(Status::Inconclusive)
        << " inconclusive (" << std::fixed << std::setprecision(3) << r.wall_time_s << " s)\n";
    out.flags(flags);
}

}  // namespace opfree::app
