#pragma once

#include <string>

#include "sliceshear/dsl.hpp"

namespace sliceshear {

struct SvgOptions {
  int cell = 40;    ///< pixels per unit
  int margin = 48;  ///< pixels around the plot area
};

/// Chart with x = t - s and y = s. Byte-identical output for equal documents.
/// Documents without a window get one fitted to their contents.
std::string emit_svg(const ChartDocument& doc, const SvgOptions& options = {});

}  // namespace sliceshear
