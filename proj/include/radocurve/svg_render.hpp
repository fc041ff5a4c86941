#pragma once

#include <string>
#include <vector>

#include "radocurve/curve_layout.hpp"

namespace radocurve {

struct SvgOptions {
  double cell = 48.0;        // lattice cell size in user units
  double margin = 32.0;      // outer margin
  double nest_step = 4.0;    // horizontal offset per nesting rank
  double stroke_width = 2.0;
  bool mark_crossings = true;
};

// SVG 1.1 document drawing the lattice outline, hole loops, vertical runs
// offset by nesting rank, back arcs, and crossing marks. Elements are emitted
// by label then segment index; byte-identical for identical input.
// Throws std::invalid_argument on an empty path list.
std::string render_svg(const std::vector<CurvePath>& paths,
                       const SvgOptions& options = {});

}  // namespace radocurve
