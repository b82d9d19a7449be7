#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetalg/atlas.hpp"
#include "jetalg/chart.hpp"

namespace jetalg::fixtures {

/// Built-in charts: affine1 (Q[x]), affine2 (Q[x1,x2]), laurent (Q[x, 1/x]),
/// elliptic (y^2 = x^3 - x + 1 localized at y).
std::vector<std::string> chart_names();
/// Built-in atlases: p1 (three charts of the projective line), plane_shear.
std::vector<std::string> atlas_names();

/// Raw JSON text of a fixture.
std::optional<std::string_view> source(std::string_view name);

/// Parsed fixtures are cached, so repeated calls return the same chart object.
ChartPtr chart(const std::string& name);
Atlas atlas(const std::string& name);

}  // namespace jetalg::fixtures
