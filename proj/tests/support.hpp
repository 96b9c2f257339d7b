#pragma once

// Shared test machinery: the flood-fill labeling oracle, random mask and
// connected-blob generators, and the brute-force diameter. These stay
// independent of the implementation paths they check.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dhdetect/raster.hpp"
#include "dhdetect/rng.hpp"

namespace dhd::testsupport {

/// Labels foreground by iterative flood fill, 1..k in row-major seed order.
inline std::vector<std::int32_t> flood_fill_labels(const BinaryMask& mask, int connectivity) {
  std::vector<std::int32_t> labels(mask.bits.size(), 0);
  std::vector<Pixel> stack;
  std::int32_t next = 0;
  for (int sy = 0; sy < mask.height; ++sy) {
    for (int sx = 0; sx < mask.width; ++sx) {
      if (!mask.bits[mask.index(sx, sy)] || labels[mask.index(sx, sy)]) {
        continue;
      }
      ++next;
      labels[mask.index(sx, sy)] = next;
      stack.assign(1, Pixel{sx, sy});
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) {
              continue;
            }
            if (connectivity == 4 && dx != 0 && dy != 0) {
              continue;
            }
            const int nx = p.x + dx;
            const int ny = p.y + dy;
            if (!mask.test(nx, ny) || labels[mask.index(nx, ny)]) {
              continue;
            }
            labels[mask.index(nx, ny)] = next;
            stack.push_back(Pixel{nx, ny});
          }
        }
      }
    }
  }
  return labels;
}

/// True iff two labelings induce the same partition of the mask's foreground.
inline bool same_partition(const BinaryMask& mask, const std::vector<std::int32_t>& a,
                           const std::vector<std::int32_t>& b) {
  std::unordered_map<std::int32_t, std::int32_t> a_to_b;
  std::unordered_map<std::int32_t, std::int32_t> b_to_a;
  for (std::size_t i = 0; i < mask.bits.size(); ++i) {
    if (!mask.bits[i]) {
      if (a[i] != 0 || b[i] != 0) {
        return false;
      }
      continue;
    }
    if (a[i] == 0 || b[i] == 0) {
      return false;
    }
    const auto [ia, inserted_a] = a_to_b.try_emplace(a[i], b[i]);
    if (!inserted_a && ia->second != b[i]) {
      return false;
    }
    const auto [ib, inserted_b] = b_to_a.try_emplace(b[i], a[i]);
    if (!inserted_b && ib->second != a[i]) {
      return false;
    }
  }
  return true;
}

inline BinaryMask random_mask(SplitMix64& rng, int width, int height, double density) {
  BinaryMask mask = BinaryMask::zeros(width, height);
  for (std::uint8_t& bit : mask.bits) {
    bit = rng.unit() < density ? 1 : 0;
  }
  return mask;
}

/// Connected blob grown by random attachment, n_pixels cells, 4-connected.
inline std::vector<Pixel> random_connected_blob(SplitMix64& rng, int n_pixels) {
  std::unordered_set<std::int64_t> taken;
  std::vector<Pixel> blob;
  auto key = [](int x, int y) {
    return (static_cast<std::int64_t>(y) << 32) | static_cast<std::uint32_t>(x);
  };
  blob.push_back(Pixel{0, 0});
  taken.insert(key(0, 0));
  while (static_cast<int>(blob.size()) < n_pixels) {
    const Pixel& base = blob[rng.below(blob.size())];
    const int dir = static_cast<int>(rng.below(4));
    const int nx = base.x + (dir == 0) - (dir == 1);
    const int ny = base.y + (dir == 2) - (dir == 3);
    if (taken.insert(key(nx, ny)).second) {
      blob.push_back(Pixel{nx, ny});
    }
  }
  std::sort(blob.begin(), blob.end(), [](const Pixel& a, const Pixel& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return blob;
}

inline std::int64_t brute_diameter_sq(const std::vector<Pixel>& pixels) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    for (std::size_t j = i + 1; j < pixels.size(); ++j) {
      const std::int64_t dx = pixels[i].x - pixels[j].x;
      const std::int64_t dy = pixels[i].y - pixels[j].y;
      best = std::max(best, dx * dx + dy * dy);
    }
  }
  return best;
}

/// Blob shifted to non-negative coordinates with the given margin, as a mask
/// plus pixel list.
struct BlobOnMask {
  BinaryMask mask;
  std::vector<Pixel> pixels;
};

inline BlobOnMask blob_on_mask(const std::vector<Pixel>& blob, int margin = 1) {
  int min_x = blob.front().x, max_x = min_x;
  int min_y = blob.front().y, max_y = min_y;
  for (const Pixel& p : blob) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  BlobOnMask out;
  out.mask = BinaryMask::zeros(max_x - min_x + 1 + 2 * margin, max_y - min_y + 1 + 2 * margin);
  out.pixels.reserve(blob.size());
  for (const Pixel& p : blob) {
    const Pixel q{p.x - min_x + margin, p.y - min_y + margin};
    out.pixels.push_back(q);
    out.mask.set(q.x, q.y, 1);
  }
  return out;
}

}  // namespace dhd::testsupport
