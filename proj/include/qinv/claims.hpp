#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qinv/state.hpp"

namespace qinv {

/// One checked statement. id is stable across releases.
struct ClaimResult {
  std::string id;
  std::string expected;
  std::string got;
  bool pass = false;
  /// Gating claims decide their suite; the others are diagnostics.
  bool gating = true;
  std::string note;

  /// "claim=<id> expected=<e> got=<g> status=PASS|FAIL"
  std::string line() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  Arithmetic mode = Arithmetic::Exact;
  /// Progress messages (may be null).
  std::ostream* log = nullptr;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  /// Part of a plain `verify` run.
  bool in_default = true;
};

const std::vector<SuiteInfo>& suite_list();
/// Throws std::out_of_range for an unknown suite.
std::vector<ClaimResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

bool suite_passed(const std::vector<ClaimResult>& claims);

}  // namespace qinv
