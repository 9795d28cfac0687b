#pragma once

#include <functional>
#include <string>
#include <vector>

namespace motzeta::acceptance {

enum class Suite { quick, full };

Suite parse_suite(const std::string& name);
std::string to_string(Suite s);

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

struct Report {
    Suite suite = Suite::quick;
    std::vector<CriterionResult> criteria;

    bool all_pass() const;
    /// Stable JSON text; contains no timings so reruns compare byte for byte.
    std::string to_json() const;
};

/// Runs criteria 1..10, then reruns them and compares the serialized
/// results for criterion 11. `progress` sees each result as it finishes.
Report run_acceptance(Suite suite, const std::function<void(const CriterionResult&)>& progress = {});

/// A single criterion; id in 1..10.
CriterionResult run_criterion(int id, Suite suite);

} // namespace motzeta::acceptance
