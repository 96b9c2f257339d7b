#pragma once

#include <cstdint>

#include "dhdetect/raster.hpp"

namespace dhd {

/// mask bit = 1 iff the intensity is <= threshold (the inclusive comparison
/// selects the dark band that holds hemorrhages, fovea and vessel fragments).
BinaryMask binarize(const GrayRaster& img, std::uint8_t threshold);

}  // namespace dhd
