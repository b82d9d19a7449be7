#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jetalg/atlas.hpp"
#include "jetalg/chart.hpp"

namespace jetalg {

/// Structural problems in a chart or atlas document. Every problem found is
/// listed; path() is the first one, e.g. "denominator" or "charts[1].params".
class SchemaError : public Error {
 public:
  struct Issue {
    std::string path;
    std::string message;
  };
  explicit SchemaError(std::vector<Issue> issues);
  const std::string& path() const { return issues_.front().path; }
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

/// Reads a chart document:
///   {"name": ..., "params": [...], "alg_gens": [{"name", "degree", "rhs"}], "denominator": ...}
/// alg_gens is optional; polynomials are expression strings over params and
/// generator names.
ChartSpec parse_chart_spec(std::string_view json_text);

/// parse_chart_spec followed by validation (ChartError on failure).
ChartPtr parse_chart(std::string_view json_text);

/// Reads an atlas document:
///   {"name", "charts": [chart...], "overlaps": [chart...],
///    "transitions": [{"from", "to", "overlap", "source_overlap", "G", "H", "G_gens", "H_gens"}],
///    "triples": [{"charts": [i, j, l], "overlap"}]}
/// G lists x_i as expressions on `overlap` (target variables), H lists y_j on
/// `source_overlap` (source variables); *_gens give generator images when the
/// charts have algebraic generators. Every transition is validated.
Atlas parse_atlas(std::string_view json_text);

std::string read_text_file(const std::string& path);

/// "@name" selects a built-in fixture, anything else is a file path.
ChartPtr load_chart(const std::string& ref);
Atlas load_atlas(const std::string& ref);

}  // namespace jetalg
