#include "opfree/report.hpp"

#include <algorithm>

namespace opfree {

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

Status Report::status() const noexcept {
    if (count(Status::Fail) > 0) return Status::Fail;
    if (count(Status::Inconclusive) > 0) return Status::Inconclusive;
    return Status::Pass;
}

std::size_t Report::count(Status s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        if (!prefix.empty()) c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
    observations.insert(observations.end(), other.observations.begin(), other.observations.end());
}

CheckRecord bound_check(std::string name, std::string inputs, double value, double threshold) {
    CheckRecord r;
    r.name = std::move(name);
    r.inputs = std::move(inputs);
    r.value = value;
    r.threshold = threshold;
    r.status = value <= threshold ? Status::Pass : Status::Fail;
    return r;
}

}  // namespace opfree
