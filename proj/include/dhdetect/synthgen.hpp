#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dhdetect/raster.hpp"
#include "dhdetect/regionprops.hpp"

namespace dhd {

/// Lattice disk: pixels with (x-cx)^2 + (y-cy)^2 <= r^2.
struct Disk {
  int cx = 0, cy = 0, r = 0;
  friend bool operator==(const Disk&, const Disk&) = default;
};

/// Inclusive axis-aligned box.
struct RectShape {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  friend bool operator==(const RectShape&, const RectShape&) = default;
};

/// Pixels within Euclidean distance half_width of the segment (x0,y0)-(x1,y1);
/// a zero-length segment degenerates to a disk.
struct Capsule {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0, half_width = 0;
  friend bool operator==(const Capsule&, const Capsule&) = default;
};

struct ShapeSpec {
  std::variant<Disk, RectShape, Capsule> shape;
  std::uint8_t intensity = 0;
  friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

struct SceneTruth {
  std::uint64_t seed = 0;
  int width = 0;
  int height = 0;
  std::uint8_t background = 0;
  std::vector<ShapeSpec> shapes;
  std::vector<std::size_t> dh_labels;  // indices of shapes that are true DH
  friend bool operator==(const SceneTruth&, const SceneTruth&) = default;
};

struct Scene {
  GrayRaster image;
  SceneTruth truth;
};

/// Lattice coverage of a shape, row-major.
std::vector<Pixel> shape_pixels(const ShapeSpec& spec);

/// Paints the shape onto the canvas at its intensity. Throws BoundsError if
/// any covered pixel falls outside the canvas.
void rasterize(const ShapeSpec& spec, GrayRaster& canvas);

/// Synthetic fundus scene: background 200 with n_dh disks (r 4..10), n_vessels
/// capsules (half width 1..2, length 25..80) and optionally one fovea-scale
/// disk (r 25..35), all painted at intensity 5 and pairwise separated by at
/// least 5 background pixels. Deterministic per seed (SplitMix64). Throws
/// PlacementError when a shape cannot be placed in 1000 attempts.
Scene generate_scene(std::uint64_t seed, int width, int height, int n_dh, int n_vessels,
                     bool with_fovea);

/// Brute-force descriptor reference: area by counting, perimeter by per-pixel
/// 4-neighbor scan over the pixel set, diameter by all-pairs distance, and the
/// ratio formulas applied directly. Independent of the labeling and calipers
/// paths it verifies.
RegionProps oracle_props(const std::vector<Pixel>& pixels);

}  // namespace dhd
