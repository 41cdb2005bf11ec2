#pragma once

// Cross-verification suites, one per acceptance criterion. Every suite is
// deterministic given its configuration.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bellhopf/format.hpp"

namespace bellhopf {

struct VerifyConfig {
  /// Upper bound on every degree a suite visits. Each suite has its own
  /// pinned bound (at most 12) and uses the smaller of the two.
  int max_degree = 12;
  std::uint64_t seed = 2024;
  /// Run independent suites on separate threads.
  bool parallel = true;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  std::string title;
  bool ok = true;
  int checks = 0;
  int failures = 0;
  /// First failing check, empty when ok.
  std::string failure;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
};

struct SuiteInfo {
  int id;
  std::string_view name;
  std::string_view title;
};

/// The fourteen suites in order.
const std::vector<SuiteInfo>& verify_suites();

/// Throws std::invalid_argument for an unknown id.
SuiteResult run_suite(int id, const VerifyConfig& config);

/// "all", a suite name such as "hopf-axioms", or a number 1..14. Throws
/// std::invalid_argument for anything else.
VerifyReport run_verify(std::string_view suite, const VerifyConfig& config);

/// One line per suite: "[ 8] antipode  FAIL  160 checks, 3 failed: ...".
std::string to_text(const VerifyReport& report);
json to_json(const VerifyReport& report);

}  // namespace bellhopf
