#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plo/pl_map.hpp"

namespace plo {

struct SvgOptions {
  unsigned scale = 400;   // pixels per unit
  unsigned margin = 40;
  bool legend = true;
};

// Standalone SVG 1.1 plot of the graphs over the unit square with the
// diagonal dashed. Output depends only on the inputs.
std::string render_svg(const std::vector<std::pair<std::string, PLMap>>& maps, const SvgOptions& options = {});

}  // namespace plo
