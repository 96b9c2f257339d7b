#pragma once

#include <cstdint>
#include <vector>

#include "dhdetect/raster.hpp"

namespace dhd {

/// Monotone-chain convex hull of integer points. Returns the hull
/// counter-clockwise (y grows downward in raster space, but orientation is
/// consistent either way) with no collinear vertices; collinear input
/// collapses to its two extreme points, a single point to itself.
std::vector<Pixel> convex_hull(std::vector<Pixel> points);

/// Max squared pairwise distance over a strictly convex polygon, by rotating
/// calipers over antipodal vertex pairs. Exact in 64-bit integers.
std::int64_t hull_diameter_sq(const std::vector<Pixel>& hull);

/// Max Euclidean distance between any two of the given pixel centers.
double max_diameter(const std::vector<Pixel>& pixels);

}  // namespace dhd
