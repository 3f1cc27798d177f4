#pragma once

#include <string>

#include "confetti/crossing.hpp"
#include "confetti/io.hpp"
#include "confetti/model.hpp"

namespace confetti {

// Binary PPM (P6), one pixel per grid cell, top image row = top grid row;
// black cells (0,0,0), white cells (255,255,255). The manifest rides in a
// header comment.
std::string ppm_bytes(const ColorGrid& grid, const RunManifest& manifest);

// Leaf-outline scatter: every leaf whose footprint meets the region, painted
// in ascending height so that the document order reproduces the occlusion
// order; fill black/white by mark threshold, uncovered canvas grey.
std::string svg_text(const Configuration& config, double p, const Rect& region,
                     double pixels_per_unit, const RunManifest& manifest);

}  // namespace confetti
