#pragma once

#include <string_view>

#include "jetalg/jet_field.hpp"
#include "jetalg/tensor.hpp"

namespace jetalg {

/// Command-line notations built on the expression grammar. Errors are
/// reported as ParseError with positions relative to the whole text.

/// "c1; c2; ..." with one coefficient per parameter: sum_i c_i d/dx_i.
VectorField parse_vector_field(std::string_view src, const ChartPtr& chart);

/// "2" or "1,0": exponents of a multi-index of the given size.
MultiIndex parse_multi_index(std::string_view src, std::size_t size);

/// "a # c1; c2": the smash element a # (sum_i c_i d/dx_i) as a jet field of order k.
JetField parse_smash_pair(std::string_view src, const ChartPtr& chart, unsigned k);

/// "fun:f | vf:c1;c2 | ...", the format written by AVWord::to_string.
AVWord parse_av_word(std::string_view src, const ChartPtr& chart);

}  // namespace jetalg
