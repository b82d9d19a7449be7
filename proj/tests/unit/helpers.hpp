#pragma once

#include <string>
#include <string_view>

#include "jetalg/expression.hpp"
#include "jetalg/fixtures.hpp"
#include "jetalg/loader.hpp"
#include "jetalg/text_input.hpp"

namespace jetalg::test {

inline ChartPtr fixture(const std::string& name) { return fixtures::chart(name); }
inline RingElem E(const ChartPtr& c, std::string_view src) { return parse_expression(src, c); }
inline VectorField V(const ChartPtr& c, std::string_view src) { return parse_vector_field(src, c); }

}  // namespace jetalg::test
