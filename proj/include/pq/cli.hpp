#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pq::cli {

// Exit codes of `pq`.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs `pq` on `args` (without the program name).  pq verify returns kOk iff
// every check passed.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pq::cli
