#include "dhdetect/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dhdetect/error.hpp"
#include "dhdetect/rng.hpp"

namespace dhd {

namespace {

constexpr std::uint8_t kBackground = 200;
constexpr std::uint8_t kShapeIntensity = 5;
constexpr int kSeparation = 5;  // background pixels required between shapes
constexpr int kMaxAttempts = 1000;

inline std::int64_t sq(std::int64_t v) { return v * v; }

// Exact integer point-to-segment distance test: dist((px,py), ab) <= limit.
bool within_segment_distance(int px, int py, const Capsule& c, int limit) {
  const std::int64_t dx = c.x1 - c.x0;
  const std::int64_t dy = c.y1 - c.y0;
  const std::int64_t len_sq = dx * dx + dy * dy;
  const std::int64_t ax = px - c.x0;
  const std::int64_t ay = py - c.y0;
  if (len_sq == 0) {
    return ax * ax + ay * ay <= sq(limit);
  }
  const std::int64_t t = ax * dx + ay * dy;
  if (t <= 0) {
    return ax * ax + ay * ay <= sq(limit);
  }
  if (t >= len_sq) {
    return sq(px - c.x1) + sq(py - c.y1) <= sq(limit);
  }
  const std::int64_t cross = ax * dy - ay * dx;
  return cross * cross <= sq(limit) * len_sq;
}

std::int64_t isqrt(std::int64_t v) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) {
    --r;
  }
  while ((r + 1) * (r + 1) <= v) {
    ++r;
  }
  return r;
}

struct PixelKey {
  static std::int64_t pack(int x, int y) {
    return (static_cast<std::int64_t>(y) << 32) | static_cast<std::uint32_t>(x);
  }
};

}  // namespace

std::vector<Pixel> shape_pixels(const ShapeSpec& spec) {
  std::vector<Pixel> out;
  if (const auto* disk = std::get_if<Disk>(&spec.shape)) {
    const std::int64_t r_sq = sq(disk->r);
    for (int y = disk->cy - disk->r; y <= disk->cy + disk->r; ++y) {
      for (int x = disk->cx - disk->r; x <= disk->cx + disk->r; ++x) {
        if (sq(x - disk->cx) + sq(y - disk->cy) <= r_sq) {
          out.push_back(Pixel{x, y});
        }
      }
    }
  } else if (const auto* rect = std::get_if<RectShape>(&spec.shape)) {
    for (int y = rect->y0; y <= rect->y1; ++y) {
      for (int x = rect->x0; x <= rect->x1; ++x) {
        out.push_back(Pixel{x, y});
      }
    }
  } else {
    const Capsule& c = std::get<Capsule>(spec.shape);
    const int x_lo = std::min(c.x0, c.x1) - c.half_width;
    const int x_hi = std::max(c.x0, c.x1) + c.half_width;
    const int y_lo = std::min(c.y0, c.y1) - c.half_width;
    const int y_hi = std::max(c.y0, c.y1) + c.half_width;
    for (int y = y_lo; y <= y_hi; ++y) {
      for (int x = x_lo; x <= x_hi; ++x) {
        if (within_segment_distance(x, y, c, c.half_width)) {
          out.push_back(Pixel{x, y});
        }
      }
    }
  }
  return out;
}

void rasterize(const ShapeSpec& spec, GrayRaster& canvas) {
  const std::vector<Pixel> pixels = shape_pixels(spec);
  for (const Pixel& p : pixels) {
    if (!canvas.in_bounds(p.x, p.y)) {
      throw BoundsError("shape pixel (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                        ") outside canvas " + std::to_string(canvas.width) + "x" +
                        std::to_string(canvas.height));
    }
  }
  for (const Pixel& p : pixels) {
    canvas.at(p.x, p.y) = spec.intensity;
  }
}

namespace {

class ScenePlacer {
 public:
  explicit ScenePlacer(GrayRaster& canvas)
      : canvas_(canvas), blocked_(canvas.pixels.size(), 0) {}

  bool try_place(const ShapeSpec& spec) {
    const std::vector<Pixel> pixels = shape_pixels(spec);
    for (const Pixel& p : pixels) {
      if (!canvas_.in_bounds(p.x, p.y) || blocked_[canvas_.index(p.x, p.y)]) {
        return false;
      }
    }
    for (const Pixel& p : pixels) {
      canvas_.at(p.x, p.y) = spec.intensity;
      block_around(p);
    }
    return true;
  }

 private:
  void block_around(const Pixel& p) {
    const int x_lo = std::max(p.x - kSeparation, 0);
    const int x_hi = std::min(p.x + kSeparation, canvas_.width - 1);
    const int y_lo = std::max(p.y - kSeparation, 0);
    const int y_hi = std::min(p.y + kSeparation, canvas_.height - 1);
    for (int y = y_lo; y <= y_hi; ++y) {
      for (int x = x_lo; x <= x_hi; ++x) {
        blocked_[canvas_.index(x, y)] = 1;
      }
    }
  }

  GrayRaster& canvas_;
  std::vector<std::uint8_t> blocked_;
};

}  // namespace

Scene generate_scene(std::uint64_t seed, int width, int height, int n_dh, int n_vessels,
                     bool with_fovea) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("scene dimensions must be positive");
  }
  if (n_dh < 0 || n_vessels < 0) {
    throw std::invalid_argument("shape counts must be non-negative");
  }

  Scene scene;
  scene.image = GrayRaster::filled(width, height, kBackground);
  scene.truth.seed = seed;
  scene.truth.width = width;
  scene.truth.height = height;
  scene.truth.background = kBackground;

  SplitMix64 rng(seed);
  ScenePlacer placer(scene.image);

  auto place = [&](const char* what, auto draw) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      ShapeSpec spec;
      if (!draw(spec)) {
        continue;
      }
      if (placer.try_place(spec)) {
        scene.truth.shapes.push_back(spec);
        return;
      }
    }
    throw PlacementError(std::string("could not place ") + what + " with separation " +
                         std::to_string(kSeparation) + " after " +
                         std::to_string(kMaxAttempts) + " attempts");
  };

  auto draw_disk = [&](int r_lo, int r_hi) {
    return [&, r_lo, r_hi](ShapeSpec& spec) {
      const int r = rng.range(r_lo, r_hi);
      if (width <= 2 * r || height <= 2 * r) {
        return false;
      }
      spec.shape = Disk{rng.range(r, width - 1 - r), rng.range(r, height - 1 - r), r};
      spec.intensity = kShapeIntensity;
      return true;
    };
  };

  // Largest shapes first; the big fovea disk is the hardest to fit.
  if (with_fovea) {
    place("fovea disk", draw_disk(25, 35));
  }
  for (int i = 0; i < n_vessels; ++i) {
    place("vessel capsule", [&](ShapeSpec& spec) {
      const int hw = rng.range(1, 2);
      const int len = rng.range(25, 80);
      if (width <= 2 * hw + 1 || height <= 2 * hw + 1) {
        return false;
      }
      const int x0 = rng.range(hw, width - 1 - hw);
      const int y0 = rng.range(hw, height - 1 - hw);
      // Integer direction draw keeps generation free of transcendental
      // functions, so scenes are bit-portable.
      const int dx = rng.range(-len, len);
      const std::int64_t dy_mag = isqrt(sq(len) - sq(dx));
      const int dy = (rng.next() & 1) ? static_cast<int>(dy_mag) : -static_cast<int>(dy_mag);
      const int x1 = x0 + dx;
      const int y1 = y0 + dy;
      if (x1 < hw || x1 > width - 1 - hw || y1 < hw || y1 > height - 1 - hw) {
        return false;
      }
      spec.shape = Capsule{x0, y0, x1, y1, hw};
      spec.intensity = kShapeIntensity;
      return true;
    });
  }
  for (int i = 0; i < n_dh; ++i) {
    place("dot hemorrhage disk", draw_disk(4, 10));
    scene.truth.dh_labels.push_back(scene.truth.shapes.size() - 1);
  }
  return scene;
}

RegionProps oracle_props(const std::vector<Pixel>& pixels) {
  if (pixels.empty()) {
    throw std::invalid_argument("oracle_props requires a non-empty pixel set");
  }

  std::unordered_set<std::int64_t> set;
  set.reserve(pixels.size() * 2);
  for (const Pixel& p : pixels) {
    set.insert(PixelKey::pack(p.x, p.y));
  }

  RegionProps props;
  props.area = static_cast<std::int64_t>(pixels.size());

  std::int64_t perimeter = 0;
  for (const Pixel& p : pixels) {
    const bool inner = set.count(PixelKey::pack(p.x - 1, p.y)) &&
                       set.count(PixelKey::pack(p.x + 1, p.y)) &&
                       set.count(PixelKey::pack(p.x, p.y - 1)) &&
                       set.count(PixelKey::pack(p.x, p.y + 1));
    if (!inner) {
      ++perimeter;
    }
  }
  props.perimeter = perimeter;

  std::int64_t max_sq = 0;
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    for (std::size_t j = i + 1; j < pixels.size(); ++j) {
      max_sq = std::max(max_sq, sq(pixels[i].x - pixels[j].x) + sq(pixels[i].y - pixels[j].y));
    }
  }
  props.diameter = std::sqrt(static_cast<double>(max_sq));

  props.circularity = 4.0 * std::numbers::pi * static_cast<double>(props.area) /
                      (static_cast<double>(props.perimeter) * static_cast<double>(props.perimeter));
  if (props.diameter > 0.0) {
    props.shape_factor = static_cast<double>(props.area) / (props.diameter * props.diameter);
  } else {
    props.degenerate = true;
    props.shape_factor = 0.0;
  }

  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
  int x0 = pixels.front().x, x1 = x0;
  int y0 = pixels.front().y, y1 = y0;
  for (const Pixel& p : pixels) {
    sum_x += p.x;
    sum_y += p.y;
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  props.centroid_x = static_cast<double>(sum_x) / static_cast<double>(props.area);
  props.centroid_y = static_cast<double>(sum_y) / static_cast<double>(props.area);
  props.bbox_x0 = x0;
  props.bbox_y0 = y0;
  props.bbox_x1 = x1;
  props.bbox_y1 = y1;
  return props;
}

}  // namespace dhd
