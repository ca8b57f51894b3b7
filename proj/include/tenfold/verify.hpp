#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tenfold {

struct VerifyResult {
    std::string module;
    std::string name;
    double deviation = 0;
    double tolerance = 0;
    bool pass = false;
    std::string error;  // nonempty if the check threw
};

// Runs the per-module invariant suites. module_filter restricts to one
// module when nonempty; tol_override replaces every check's tolerance.
std::vector<VerifyResult> run_verification(
    const std::string& module_filter = "",
    std::optional<double> tol_override = std::nullopt);

}  // namespace tenfold
