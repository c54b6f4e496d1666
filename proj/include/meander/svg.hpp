#pragma once

#include <string>

#include "meander/types.hpp"

namespace meander {

// Standalone SVG drawing: n dots on a horizontal baseline at 40px spacing,
// 1-based labels, top arcs as semicircles above the line and bottom arcs
// below (radius = half the chord).
std::string render_svg(const MeanderType& t);

// Throws std::runtime_error when the path cannot be written.
void write_svg_file(const MeanderType& t, const std::string& path);

}  // namespace meander
