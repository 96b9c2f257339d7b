#include "dhdetect/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace dhd {

namespace {

inline std::int64_t cross(const Pixel& o, const Pixel& a, const Pixel& b) {
  return static_cast<std::int64_t>(a.x - o.x) * (b.y - o.y) -
         static_cast<std::int64_t>(a.y - o.y) * (b.x - o.x);
}

inline std::int64_t dist_sq(const Pixel& a, const Pixel& b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

std::vector<Pixel> convex_hull(std::vector<Pixel> points) {
  std::sort(points.begin(), points.end(), [](const Pixel& a, const Pixel& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) {
    return points;
  }

  std::vector<Pixel> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) {
      --k;
    }
    hull[k++] = points[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) {
      --k;
    }
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

std::int64_t hull_diameter_sq(const std::vector<Pixel>& hull) {
  const std::size_t n = hull.size();
  if (n < 2) {
    return 0;
  }
  if (n == 2) {
    return dist_sq(hull[0], hull[1]);
  }
  std::int64_t best = 0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Pixel& a = hull[i];
    const Pixel& b = hull[(i + 1) % n];
    // Advance j while the next vertex lies farther from edge (a,b).
    while (true) {
      const Pixel& c = hull[j];
      const Pixel& d = hull[(j + 1) % n];
      const std::int64_t turn =
          static_cast<std::int64_t>(b.x - a.x) * (d.y - c.y) -
          static_cast<std::int64_t>(b.y - a.y) * (d.x - c.x);
      if (turn <= 0) {
        break;
      }
      j = (j + 1) % n;
    }
    best = std::max(best, dist_sq(a, hull[j]));
    best = std::max(best, dist_sq(b, hull[(j + 1) % n]));
  }
  return best;
}

double max_diameter(const std::vector<Pixel>& pixels) {
  return std::sqrt(static_cast<double>(hull_diameter_sq(convex_hull(pixels))));
}

}  // namespace dhd
