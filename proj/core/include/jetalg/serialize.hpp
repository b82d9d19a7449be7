#pragma once

#include <string>
#include <string_view>

#include "jetalg/diff_op.hpp"
#include "jetalg/jet.hpp"
#include "jetalg/jet_field.hpp"
#include "jetalg/lie_plus.hpp"
#include "jetalg/semidirect.hpp"
#include "jetalg/tensor.hpp"

namespace jetalg {

/// JSON documents for computed values. Ring elements are stored as
/// expression strings, multi-indices as exponent arrays, and every document
/// carries a "kind" and the chart name. Reading checks both against the
/// chart it is given. `indent` < 0 gives compact output.
///
///   jet        {"kind":"jet","chart","order","terms":[{"t":[..],"c":".."}]}
///   jet_field  {"kind":"jet_field","chart","order","components":[[term..]..]}
///   current    {"kind":"current","chart","max_total","terms":[{"m":[..],"dir":i,"c":".."}]}
///   semidirect {"kind":"semidirect","chart","max_total","v":[".."],"l":[current term..]}
///   tensor     {"kind":"tensor","chart","max_total","terms":[{"d":[..],"pbw":[{"m","dir"}..],"c":".."}]}
///   diff_op    {"kind":"diff_op","chart","terms":[{"d":[..],"c":".."}]}
std::string to_json(const Jet& u, int indent = -1);
std::string to_json(const JetField& u, int indent = -1);
std::string to_json(const CurrentElem& c, int indent = -1);
std::string to_json(const SemiDirectElem& p, int indent = -1);
std::string to_json(const TensorElem& s, int indent = -1);
std::string to_json(const DiffOp& d, int indent = -1);

Jet jet_from_json(std::string_view text, const ChartPtr& chart);
JetField jet_field_from_json(std::string_view text, const ChartPtr& chart);
CurrentElem current_from_json(std::string_view text, const ChartPtr& chart);
SemiDirectElem semidirect_from_json(std::string_view text, const ChartPtr& chart);
TensorElem tensor_from_json(std::string_view text, const ChartPtr& chart);
DiffOp diff_op_from_json(std::string_view text, const ChartPtr& chart);

}  // namespace jetalg
