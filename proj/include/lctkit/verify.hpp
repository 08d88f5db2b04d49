#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lctkit {

struct CaseOutcome {
  enum class Status { Pass, Fail, Skip } status = Status::Pass;
  std::string message;

  static CaseOutcome pass() { return {}; }
  static CaseOutcome fail(std::string m) { return {Status::Fail, std::move(m)}; }
  static CaseOutcome skip(std::string m) { return {Status::Skip, std::move(m)}; }
};

struct SuiteReport {
  std::string name;
  long cases = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::vector<std::pair<long, std::string>> failures;  // (case index, message), in index order

  bool ok() const { return failed == 0 && passed > 0; }
};

// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

// Default `trials` for a suite (its meaning is suite specific, see README).
long default_trials(const std::string& suite);

// Runs a suite. Cases are generated sequentially from `seed`, evaluated on `jobs` threads and
// reported in case order, so the report does not depend on `jobs`.
SuiteReport run_suite(const std::string& suite, long trials, std::uint64_t seed, int jobs = 1);

}  // namespace lctkit
