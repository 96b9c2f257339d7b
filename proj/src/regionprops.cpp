#include "dhdetect/regionprops.hpp"

#include <algorithm>
#include <numbers>

#include "dhdetect/error.hpp"
#include "dhdetect/geometry.hpp"

namespace dhd {

std::int64_t region_area(const Region& r) { return static_cast<std::int64_t>(r.pixels.size()); }

bool is_boundary_pixel(const BinaryMask& mask, int x, int y) {
  if (!mask.test(x, y)) {
    return false;
  }
  return !mask.test(x - 1, y) || !mask.test(x + 1, y) || !mask.test(x, y - 1) ||
         !mask.test(x, y + 1);
}

std::int64_t region_perimeter(const Region& r, const BinaryMask& mask) {
  std::int64_t count = 0;
  for (const Pixel& p : r.pixels) {
    if (is_boundary_pixel(mask, p.x, p.y)) {
      ++count;
    }
  }
  return count;
}

std::vector<Pixel> boundary_pixels(const Region& r, const BinaryMask& mask) {
  std::vector<Pixel> out;
  for (const Pixel& p : r.pixels) {
    if (is_boundary_pixel(mask, p.x, p.y)) {
      out.push_back(p);
    }
  }
  return out;
}

double circularity(double area, double perimeter) {
  if (perimeter <= 0.0) {
    throw DegenerateRegion("circularity undefined: perimeter is zero");
  }
  return 4.0 * std::numbers::pi * area / (perimeter * perimeter);
}

double shape_factor(double area, double diameter) {
  if (diameter <= 0.0) {
    throw DegenerateRegion("shape factor undefined: diameter is zero");
  }
  return area / (diameter * diameter);
}

RegionProps compute_props(const Region& r, const BinaryMask& mask) {
  RegionProps props;
  props.label = r.label;
  props.area = region_area(r);
  props.perimeter = region_perimeter(r, mask);
  props.diameter = max_diameter(r.pixels);
  props.circularity = circularity(static_cast<double>(props.area),
                                  static_cast<double>(props.perimeter));
  if (props.diameter > 0.0) {
    props.shape_factor = shape_factor(static_cast<double>(props.area), props.diameter);
  } else {
    props.degenerate = true;
    props.shape_factor = 0.0;
  }

  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
  int x0 = r.pixels.front().x, x1 = x0;
  int y0 = r.pixels.front().y, y1 = y0;
  for (const Pixel& p : r.pixels) {
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
