#include "dhdetect/labeling.hpp"

#include <stdexcept>

#include "dhdetect/union_find.hpp"

namespace dhd {

namespace {

void check_connectivity(int connectivity) {
  if (connectivity != 4 && connectivity != 8) {
    throw std::invalid_argument("connectivity must be 4 or 8");
  }
}

// Number of foreground pixels with no already-visited foreground neighbor;
// each of these opens a provisional label, so this bounds the union-find size
// exactly.
std::size_t count_provisional(const BinaryMask& mask, int connectivity) {
  std::size_t count = 0;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.bits[mask.index(x, y)]) {
        continue;
      }
      bool seeded = mask.test(x - 1, y) || mask.test(x, y - 1);
      if (!seeded && connectivity == 8) {
        seeded = mask.test(x - 1, y - 1) || mask.test(x + 1, y - 1);
      }
      if (!seeded) {
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

LabelMap label_components(const BinaryMask& mask, int connectivity) {
  check_connectivity(connectivity);

  LabelMap lm;
  lm.width = mask.width;
  lm.height = mask.height;
  lm.labels.assign(mask.bits.size(), 0);

  UnionFind uf(count_provisional(mask, connectivity) + 1);  // label 0 stays background
  std::int32_t next_label = 1;

  const int w = mask.width;
  const int h = mask.height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = mask.index(x, y);
      if (!mask.bits[i]) {
        continue;
      }
      std::int32_t neighbors[4];
      int n_neighbors = 0;
      if (x > 0 && lm.labels[i - 1]) {
        neighbors[n_neighbors++] = lm.labels[i - 1];
      }
      if (y > 0) {
        if (lm.labels[i - w]) {
          neighbors[n_neighbors++] = lm.labels[i - w];
        }
        if (connectivity == 8) {
          if (x > 0 && lm.labels[i - w - 1]) {
            neighbors[n_neighbors++] = lm.labels[i - w - 1];
          }
          if (x + 1 < w && lm.labels[i - w + 1]) {
            neighbors[n_neighbors++] = lm.labels[i - w + 1];
          }
        }
      }
      if (n_neighbors == 0) {
        lm.labels[i] = next_label++;
      } else {
        lm.labels[i] = neighbors[0];
        for (int k = 1; k < n_neighbors; ++k) {
          uf.unite(static_cast<std::size_t>(neighbors[0]),
                   static_cast<std::size_t>(neighbors[k]));
        }
      }
    }
  }

  // Second pass: resolve equivalences, then renumber densely in row-major
  // first-encounter order.
  std::vector<std::int32_t> dense(static_cast<std::size_t>(next_label), 0);
  std::int32_t region_count = 0;
  for (std::size_t i = 0; i < lm.labels.size(); ++i) {
    if (!lm.labels[i]) {
      continue;
    }
    const std::size_t root = uf.find(static_cast<std::size_t>(lm.labels[i]));
    if (!dense[root]) {
      dense[root] = ++region_count;
    }
    lm.labels[i] = dense[root];
  }
  lm.region_count = region_count;
  return lm;
}

std::vector<Region> extract_regions(const LabelMap& lm) {
  std::vector<Region> regions(static_cast<std::size_t>(lm.region_count));
  for (std::int32_t l = 0; l < lm.region_count; ++l) {
    regions[static_cast<std::size_t>(l)].label = l + 1;
  }
  for (int y = 0; y < lm.height; ++y) {
    for (int x = 0; x < lm.width; ++x) {
      const std::int32_t l = lm.labels[lm.index(x, y)];
      if (l > 0) {
        regions[static_cast<std::size_t>(l - 1)].pixels.push_back(Pixel{x, y});
      }
    }
  }
  return regions;
}

}  // namespace dhd
