#pragma once

#include <string>
#include <vector>

#include "hermann/triad.hpp"

namespace hermann {

struct MarkedPoint {
  CellPoint z;
  std::string label;
};

/// SVG 1.1 drawing of a rank-two cell: shaded polygon, boundary segments
/// labelled by their hyperplanes, and the marked points. Output depends only
/// on the inputs. Throws std::invalid_argument for rank != 2.
std::string emit_cell_svg(const SymmetricTriad& t, const std::vector<MarkedPoint>& points);

}  // namespace hermann
