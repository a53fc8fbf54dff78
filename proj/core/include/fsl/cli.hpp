#pragma once

// Command-line surface. Exit codes: 0 all checks passed, 1 a certified-value
// check failed, 2 usage error, 3 budget exceeded or indeterminate result.

#include <iosfwd>
#include <string>
#include <vector>

namespace fsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fsl::cli
