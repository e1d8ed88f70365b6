#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecl::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kBudgetExceeded = 2;
inline constexpr int kMismatch = 3;

/// Runs one command; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecl::cli
