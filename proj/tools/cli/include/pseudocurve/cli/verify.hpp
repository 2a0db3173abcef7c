#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pseudocurve::cli {

struct VerificationFailure {
  std::string input;
  std::string expected;
  std::string got;
  std::string anchor;
};

struct VerificationCertificate {
  std::string suite;
  std::int64_t cases_run = 0;
  std::vector<VerificationFailure> failures;

  std::int64_t cases_failed() const { return static_cast<std::int64_t>(failures.size()); }
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Random cases per parameter point; 0 selects each suite's default.
  int cases = 0;
  /// Worker threads; 0 reads PSEUDOCURVE_JOBS and falls back to the hardware count.
  int jobs = 0;
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerificationCertificate run_suite(const std::string& name, const VerifyOptions& options);

/// Runs the suites concurrently and returns the certificates in name order.
std::vector<VerificationCertificate> run_suites(const std::vector<std::string>& names, const VerifyOptions& options);

/// Stable JSON rendering; failures sorted by input.
std::string certificate_json(const std::vector<VerificationCertificate>& certs);

}  // namespace pseudocurve::cli
