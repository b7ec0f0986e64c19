#pragma once

#include <string>
#include <vector>

namespace opfree {

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s) noexcept;

/// One verified quantity: what was measured, against which threshold, with what outcome.
struct CheckRecord {
    std::string name;
    std::string inputs;  ///< canonical description of the inputs (hashed into the report digest)
    double value = 0.0;
    double threshold = 0.0;
    Status status = Status::Pass;
    std::string note;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;
    std::vector<std::string> observations;  ///< documented discrepancies and remarks

    void add(CheckRecord record) { checks.push_back(std::move(record)); }

    /// Fail if any check failed, else Inconclusive if any was inconclusive, else Pass.
    Status status() const noexcept;
    bool passed() const noexcept { return status() == Status::Pass; }
    std::size_t count(Status s) const noexcept;

    /// Appends every check of `other`, prefixing names with `prefix`.
    void merge(const Report& other, const std::string& prefix = {});
};

/// Pass iff value <= threshold.
CheckRecord bound_check(std::string name, std::string inputs, double value, double threshold);

}  // namespace opfree
