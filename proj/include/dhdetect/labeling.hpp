#pragma once

#include <cstdint>
#include <vector>

#include "dhdetect/raster.hpp"

namespace dhd {

/// Per-pixel component labels. Background is 0; foreground labels are dense
/// 1..region_count, numbered by the row-major position of each component's
/// first pixel.
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;
  std::int32_t region_count = 0;

  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  std::int32_t at(int x, int y) const { return labels[index(x, y)]; }
};

/// One connected component: its label and pixels in row-major order.
struct Region {
  std::int32_t label = 0;
  std::vector<Pixel> pixels;
};

/// Two-pass connected-component labeling. The first pass assigns provisional
/// labels from already-visited neighbors (west/north, plus NW/NE when
/// 8-connected) and records equivalences in a union-find table; the second
/// pass relabels through the resolved roots.
LabelMap label_components(const BinaryMask& mask, int connectivity);

std::vector<Region> extract_regions(const LabelMap& lm);

}  // namespace dhd
