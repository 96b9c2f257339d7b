#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dhdetect/labeling.hpp"
#include "dhdetect/rng.hpp"
#include "support.hpp"

using namespace dhd;
namespace ts = dhd::testsupport;

TEST_CASE("all-background mask has no regions") {
  const LabelMap lm = label_components(BinaryMask::zeros(8, 8), 8);
  CHECK(lm.region_count == 0);
  for (auto l : lm.labels) {
    CHECK(l == 0);
  }
  CHECK(extract_regions(lm).empty());
}

TEST_CASE("diagonal pair joins under 8-connectivity, splits under 4") {
  BinaryMask mask = BinaryMask::zeros(3, 3);
  mask.set(0, 0, 1);
  mask.set(1, 1, 1);
  CHECK(label_components(mask, 8).region_count == 1);
  CHECK(label_components(mask, 4).region_count == 2);
}

TEST_CASE("solid block is a single region with row-major pixels") {
  BinaryMask mask = BinaryMask::zeros(5, 5);
  for (int y = 1; y <= 3; ++y) {
    for (int x = 1; x <= 3; ++x) {
      mask.set(x, y, 1);
    }
  }
  const LabelMap lm = label_components(mask, 8);
  REQUIRE(lm.region_count == 1);
  const std::vector<Region> regions = extract_regions(lm);
  REQUIRE(regions.size() == 1);
  REQUIRE(regions[0].label == 1);
  REQUIRE(regions[0].pixels.size() == 9);
  CHECK(regions[0].pixels.front() == Pixel{1, 1});
  CHECK(regions[0].pixels.back() == Pixel{3, 3});
  for (std::size_t i = 1; i < regions[0].pixels.size(); ++i) {
    const Pixel& a = regions[0].pixels[i - 1];
    const Pixel& b = regions[0].pixels[i];
    CHECK((a.y < b.y || (a.y == b.y && a.x < b.x)));
  }
}

TEST_CASE("labels are dense and numbered in row-major first-encounter order") {
  BinaryMask mask = BinaryMask::zeros(6, 3);
  mask.set(4, 0, 1);  // first encountered
  mask.set(0, 1, 1);  // second
  mask.set(2, 2, 1);  // third
  const LabelMap lm = label_components(mask, 8);
  REQUIRE(lm.region_count == 3);
  CHECK(lm.at(4, 0) == 1);
  CHECK(lm.at(0, 1) == 2);
  CHECK(lm.at(2, 2) == 3);
}

TEST_CASE("stairstep merge resolves to one label") {
  // A U-shape forces a provisional-label equivalence: two arms meet at the
  // bottom row only.
  BinaryMask mask = BinaryMask::zeros(3, 3);
  mask.set(0, 0, 1);
  mask.set(2, 0, 1);
  mask.set(0, 1, 1);
  mask.set(2, 1, 1);
  mask.set(0, 2, 1);
  mask.set(1, 2, 1);
  mask.set(2, 2, 1);
  const LabelMap lm = label_components(mask, 4);
  CHECK(lm.region_count == 1);
}

TEST_CASE("invalid connectivity is rejected") {
  CHECK_THROWS_AS(label_components(BinaryMask::zeros(2, 2), 6), std::invalid_argument);
}

TEST_CASE("random masks match the flood-fill oracle") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int w = rng.range(1, 64);
    const int h = rng.range(1, 64);
    const double density = std::vector<double>{0.1, 0.3, 0.5, 0.7}[trial % 4];
    const BinaryMask mask = ts::random_mask(rng, w, h, density);
    for (int connectivity : {4, 8}) {
      const LabelMap lm = label_components(mask, connectivity);
      const std::vector<std::int32_t> oracle = ts::flood_fill_labels(mask, connectivity);
      CAPTURE(trial);
      CAPTURE(connectivity);
      REQUIRE(ts::same_partition(mask, lm.labels, oracle));
    }
  }
}

TEST_CASE("labeling is deterministic") {
  SplitMix64 rng(77);
  const BinaryMask mask = ts::random_mask(rng, 40, 40, 0.5);
  const LabelMap a = label_components(mask, 8);
  const LabelMap b = label_components(mask, 8);
  CHECK(a.labels == b.labels);
  CHECK(a.region_count == b.region_count);
}

TEST_CASE("extracted regions partition the foreground") {
  SplitMix64 rng(78);
  const BinaryMask mask = ts::random_mask(rng, 48, 32, 0.4);
  const LabelMap lm = label_components(mask, 8);
  const std::vector<Region> regions = extract_regions(lm);
  REQUIRE(static_cast<std::int32_t>(regions.size()) == lm.region_count);

  std::set<std::pair<int, int>> seen;
  std::size_t total = 0;
  for (const Region& r : regions) {
    REQUIRE_FALSE(r.pixels.empty());
    for (const Pixel& p : r.pixels) {
      REQUIRE(lm.at(p.x, p.y) == r.label);
      REQUIRE(seen.emplace(p.x, p.y).second);  // pairwise disjoint
    }
    total += r.pixels.size();
  }
  std::size_t foreground = 0;
  for (auto b : mask.bits) {
    foreground += b;
  }
  CHECK(total == foreground);
}

TEST_CASE("max label equals region count with no gaps") {
  SplitMix64 rng(79);
  const BinaryMask mask = ts::random_mask(rng, 64, 64, 0.3);
  const LabelMap lm = label_components(mask, 4);
  std::set<std::int32_t> labels;
  for (auto l : lm.labels) {
    if (l != 0) {
      labels.insert(l);
    }
  }
  REQUIRE(static_cast<std::int32_t>(labels.size()) == lm.region_count);
  if (lm.region_count > 0) {
    CHECK(*labels.begin() == 1);
    CHECK(*labels.rbegin() == lm.region_count);
  }
}
