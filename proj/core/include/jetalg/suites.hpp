#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetalg/error.hpp"
#include "jetalg/report.hpp"

namespace jetalg {

class SuiteError : public Error {
 public:
  using Error::Error;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Chart references ("@name" or a file path); empty selects the suite defaults.
  std::vector<std::string> charts;
  /// Atlas reference for transition and cocycle; empty selects the defaults.
  std::string atlas;
  /// Samples per check group; unset selects the suite defaults.
  std::optional<unsigned> cases;
  /// Largest jet order or truncation degree; unset selects the defaults.
  std::optional<unsigned> order;
  /// Runs only the case with this id.
  std::string case_id;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Suite names accepted by run_suite, in the order "all" runs them, followed
/// by "all".
const std::vector<std::string>& suite_names();

/// Runs a verification suite. Cases draw their inputs from a generator seeded
/// by (seed, case id), so any case can be re-run alone with `case_id`, and
/// cases may run in parallel without changing the report. Throws SuiteError
/// for an unknown suite or case id.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace jetalg
