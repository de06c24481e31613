#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace rrt {

enum class VerifyLevel {
    fast,  //!< reduced replication counts, KS thresholds rescaled to match
    full,  //!< the stated replication counts and tolerances
};

VerifyLevel parse_verify_level(const std::string& name);
std::string to_string(VerifyLevel level);

inline constexpr int kCriterionCount = 12;

struct CheckResult {
    int criterion = 0;
    std::string name;
    //! The claim being checked, stated as a formula.
    std::string anchor;
    bool passed = false;
    //! One line per sub-check.
    std::vector<std::string> details;
    //! Conclusions drawn from the data, e.g. which of two constants holds.
    std::map<std::string, std::string> findings;
    double seconds = 0.0;
};

struct VerifyReport {
    VerifyLevel level = VerifyLevel::full;
    unsigned threads = 1;
    std::vector<CheckResult> checks;

    bool passed() const;
    nlohmann::json to_json() const;
};

//! Run one acceptance criterion (1..kCriterionCount).
CheckResult run_criterion(int criterion, VerifyLevel level, unsigned threads = 1);

//! Run the listed criteria (all of them when empty), logging one line per
//! check and a summary table to `log` when given.
VerifyReport run_verification(VerifyLevel level, unsigned threads, std::ostream* log = nullptr,
                              std::span<const int> only = {});

//! "[PASS] 3 joint table symmetry (anchor) 0.12s"
std::string summary_line(const CheckResult& result);

}  // namespace rrt
