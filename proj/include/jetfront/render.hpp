#pragma once

#include <string>

#include "jetfront/front.hpp"

namespace jetfront {

struct RenderOptions {
  double column_width = 48.0;
  double row_height = 28.0;
  double margin = 24.0;
  double stroke_width = 2.0;
};

// Deterministic SVG picture of the front: one path per component, events at
// uniform x spacing, crossings drawn with the descending strand unbroken.
std::string render_svg(const FrontDiagram& d, const RenderOptions& options = {});

}  // namespace jetfront
