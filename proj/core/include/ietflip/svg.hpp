#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ietflip/lift.hpp"
#include "ietflip/map_class.hpp"

namespace ietflip {

using PlotItem = std::variant<MapClass, Lift>;

/// Graphs of up to 8 classes (or lifts), one unit-square panel each, the
/// circle parameterized as [0,1] on both axes. Branches appear as slope +-1
/// segments, germ limits at breakpoints as hollow circles, and chosen lift
/// values as filled dots. Output is byte-deterministic for equal input.
std::string plot_svg(const std::vector<PlotItem>& panels);

}  // namespace ietflip
