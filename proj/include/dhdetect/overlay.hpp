#pragma once

#include "dhdetect/detector.hpp"
#include "dhdetect/raster.hpp"

namespace dhd {

/// Copy of base with accepted regions outlined red (255,0,0) and fovea-scale
/// rejections outlined blue (0,0,255); all other pixels untouched. Throws
/// BoundsError if any report coordinate falls outside base.
RgbRaster render_overlay(const RgbRaster& base, const DetectionReport& report);

}  // namespace dhd
