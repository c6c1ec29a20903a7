#pragma once

// Command-line front end. run_cli holds all logic; the executable only
// forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "polyspec/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polyspec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Suites: identities, chartable, obstruction, isomorphisms, all.
/// Throws PreconditionError on an unknown suite.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

/// Known fixture names, in a fixed order.
const std::vector<std::string>& fixture_names();

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyspec
