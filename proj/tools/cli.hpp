#pragma once

#include <string>
#include <vector>

namespace constel::cli {

// Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

struct RunReport {
    std::string command;            // the invocation, echoed
    std::string verdict;            // pass | fail | inconclusive | usage
    std::string witnesses_json;     // JSON object with witnesses / artifacts
    long long budget_spent = 0;
    double wall_ms = 0.0;           // zeroed in --json mode for reproducibility
    int exit_code = kExitPass;
    std::string text;               // human-readable output (non-json mode)
    bool json_mode = false;

    std::string to_json() const;
};

RunReport dispatch(const std::vector<std::string>& args);

}  // namespace constel::cli
