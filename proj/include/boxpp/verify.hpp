#pragma once

#include <string>
#include <vector>

namespace boxpp {

struct CheckResult {
    std::string name;
    std::string box;
    bool pass = false;
    std::string diff;  // shown on FAIL
};

struct SuiteOptions {
    // Box caps for the box-parameterized suites.
    int max_a = 3, max_b = 3, max_c = 3;
    // When false, the partition suites use their own defaults (8x8 box,
    // count tables up to 12) instead of the box caps.
    bool max_given = false;
};

/// Known suite names: equi, lgv, schur, groth, macmahon, stanley,
/// fixed-trace, partition-equi, triangle, all.
std::vector<std::string> suite_names();

/// Runs one suite; throws std::invalid_argument for unknown names.
/// Deterministic: identical options yield identical results.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts);

/// One line per check: "CHECK <name> box=<box> PASS|FAIL [diff=<poly>]".
std::string render_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace boxpp
