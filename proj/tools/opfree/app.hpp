#pragma once
// Scenario loading, suite dispatch and report rendering behind the opfree command.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <opfree/errors.hpp>
#include <opfree/report.hpp>

namespace opfree::app {

inline constexpr int kSchemaVersion = 1;

/// Scenario does not match the schema (exit code 2).
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Command-line overrides; unset fields fall back to the scenario, then to the defaults.
struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance;
    std::optional<int> depth;
    std::optional<std::size_t> trials;
};

/// Settings a suite ran with after resolving flags, scenario and defaults.
struct Environment {
    std::uint64_t seed = 0;
    double tolerance = 1e-10;
    std::optional<int> depth;
    std::size_t trials = 50;
};

struct RunResult {
    std::string kind;
    std::string name;  ///< scenario name, or the suite id for verify scenarios
    Environment environment;
    Report report;
    double wall_time_s = 0.0;
};

/// The verify suite ids, in documentation order.
const std::vector<std::string>& suite_ids();

/// Validates and runs a parsed scenario. Throws SchemaError on schema violations.
RunResult run_scenario(const nlohmann::json& scenario, const RunOptions& options);

/// Reads and parses a scenario file. Throws SchemaError on I/O or JSON syntax errors.
nlohmann::json load_scenario(const std::string& path);

/// Machine-readable report; wall time is confined to the top-level "timing" object.
nlohmann::json report_json(const RunResult& result);

/// Human-readable summary table.
void print_table(const RunResult& result, std::ostream& out);

/// 0 if every check passed, 1 otherwise.
int exit_code(const Report& report);

/// FNV-1a digest of a canonical input description, as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace opfree::app
