#pragma once

#include <string>

#include "diskpack/geometry.hpp"

namespace diskpack {

struct SvgOptions {
  bool labels = false;
  double scale = 50.0;  // pixels per length unit
};

/// SVG 1.1 document with one <circle> per disk. The y axis is flipped so
/// the picture matches the mathematical orientation.
std::string render_svg(const Packing& p, const SvgOptions& opts = {});

}  // namespace diskpack
