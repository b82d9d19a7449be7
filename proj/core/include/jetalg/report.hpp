#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jetalg {

/// Outcome of one verification case.
struct CheckRecord {
  std::string id;
  std::string statement;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::string repro;   // command line that re-runs this case alone
  std::string detail;  // inputs and mismatch, filled for failures
};

/// Machine-readable verification report. Output depends only on the suite,
/// the seed, the inputs and the check outcomes, so two runs with the same
/// arguments produce identical bytes.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;  // chart and atlas ids
  std::vector<CheckRecord> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  std::string to_json(int indent = 2) const;
  /// One line per failure plus a summary line; `verbose` lists every check.
  std::string to_text(bool verbose = false) const;
};

/// Library version string.
const char* version();

}  // namespace jetalg
