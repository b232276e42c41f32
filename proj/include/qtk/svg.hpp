#pragma once

// SVG 1.1 rendering of patches, paired tiles and the pentagonal star.
// Exact points become floats only here.

#include <string>
#include <vector>

#include "qtk/quasilattice.hpp"
#include "qtk/tiling.hpp"

namespace qtk {

struct SvgStyle {
  int precision = 12;          // significant digits of coordinates
  double stroke_width = 0.01;  // relative to the larger side of the bounding box
};

/// Digits from QTK_PRECISION (default 12, clamped to [1, 17]).
int precision_from_env();

std::string render_svg(const Patch& p, const SvgStyle& style = {});
std::string render_svg(const std::vector<PairedTile>& tiles, const SvgStyle& style = {});
/// One line element from the origin to each generator of a planar quasilattice.
std::string render_star(const Quasilattice& q, const SvgStyle& style = {});

}  // namespace qtk
