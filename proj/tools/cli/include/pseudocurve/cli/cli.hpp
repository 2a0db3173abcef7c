#pragma once

#include <ostream>
#include <span>
#include <string>

namespace pseudocurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerificationFailed = 2;
inline constexpr int kExitUsage = 64;

/// argv[0] is the subcommand name (no program name).
int run_subcommand(std::span<const std::string> argv, std::ostream& out, std::ostream& err);

}  // namespace pseudocurve::cli
