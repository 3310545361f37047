#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace symloci::cli {

/// Upper bounds for the verification suites; unset fields take each suite's
/// own default.
struct VerifyBounds {
  std::optional<int> max_e;
  std::optional<int> max_f;
  std::optional<int> max_p;
  std::optional<int> max_n;
  int jobs = 1;
};

struct CaseResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;  // reason for a failure, empty on success
};

const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"); results come back in case order regardless of
/// the number of jobs. Throws std::invalid_argument for an unknown suite.
std::vector<CaseResult> run_suite(const std::string& suite, const VerifyBounds& bounds);

/// `CASE <name> <params> : PASS|FAIL`
std::string format_case(const CaseResult& r);

/// Full command line without the program name. Returns the exit status:
/// 0 on success, 1 when a verification case fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symloci::cli
