#pragma once

#include <cstdint>
#include <vector>

#include "dhdetect/labeling.hpp"
#include "dhdetect/raster.hpp"

namespace dhd {

/// Geometric descriptors of one labeled region. Boundary-pixel count is the
/// perimeter estimator throughout: region pixels with at least one 4-neighbor
/// that is background or off-raster. Diameter is the max Euclidean distance
/// between pixel centers. A single-pixel region has diameter 0 and its shape
/// factor is undefined; such regions carry degenerate=true and shape_factor 0.
struct RegionProps {
  std::int32_t label = 0;
  std::int64_t area = 0;
  std::int64_t perimeter = 0;
  double diameter = 0.0;
  double circularity = 0.0;
  double shape_factor = 0.0;
  bool degenerate = false;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  int bbox_x0 = 0, bbox_y0 = 0, bbox_x1 = 0, bbox_y1 = 0;  // inclusive
};

std::int64_t region_area(const Region& r);

/// True when (x,y) is foreground with some 4-neighbor background or off-raster.
bool is_boundary_pixel(const BinaryMask& mask, int x, int y);

std::int64_t region_perimeter(const Region& r, const BinaryMask& mask);

/// The region pixels that satisfy is_boundary_pixel, in row-major order.
std::vector<Pixel> boundary_pixels(const Region& r, const BinaryMask& mask);

/// 4 * pi * area / perimeter^2. Throws DegenerateRegion when perimeter <= 0.
double circularity(double area, double perimeter);

/// area / diameter^2. Throws DegenerateRegion when diameter <= 0; callers that
/// must not abort use the degenerate flag in RegionProps instead.
double shape_factor(double area, double diameter);

RegionProps compute_props(const Region& r, const BinaryMask& mask);

}  // namespace dhd
