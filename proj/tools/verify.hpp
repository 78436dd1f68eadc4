#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charavg::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Named verification suites: identities, taylor, bernoulli,
/// orthogonality, all. qmax = 0 picks each check's default range.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t qmax);

}  // namespace charavg::cli
