#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dhdetect/error.hpp"
#include "dhdetect/regionprops.hpp"
#include "dhdetect/rng.hpp"
#include "dhdetect/synthgen.hpp"
#include "support.hpp"

using namespace dhd;
namespace ts = dhd::testsupport;

namespace {

RegionProps props_of(const std::vector<Pixel>& pixels) {
  const ts::BlobOnMask blob = ts::blob_on_mask(pixels);
  return compute_props(Region{1, blob.pixels}, blob.mask);
}

std::vector<Pixel> block(int w, int h) {
  std::vector<Pixel> out;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.push_back(Pixel{x, y});
    }
  }
  return out;
}

std::vector<Pixel> disk_pixels(int r) {
  return shape_pixels(ShapeSpec{Disk{r, r, r}, 5});
}

bool descriptors_equal(const RegionProps& a, const RegionProps& b) {
  return a.area == b.area && a.perimeter == b.perimeter && a.diameter == b.diameter &&
         a.circularity == b.circularity && a.shape_factor == b.shape_factor &&
         a.degenerate == b.degenerate;
}

}  // namespace

TEST_CASE("single pixel region") {
  const RegionProps p = props_of({Pixel{0, 0}});
  CHECK(p.area == 1);
  CHECK(p.perimeter == 1);
  CHECK(p.diameter == 0.0);
  CHECK(p.degenerate);
  CHECK(p.shape_factor == 0.0);
}

TEST_CASE("3x3 block descriptors") {
  const RegionProps p = props_of(block(3, 3));
  CHECK(p.area == 9);
  CHECK(p.perimeter == 8);
  CHECK(p.diameter == doctest::Approx(2.8284).epsilon(1e-4));
  CHECK(p.circularity == doctest::Approx(36.0 * std::numbers::pi / 64.0).epsilon(1e-12));
  CHECK(p.circularity == doctest::Approx(1.767).epsilon(1e-3));
  CHECK(p.shape_factor == doctest::Approx(1.125).epsilon(1e-12));
  CHECK(p.centroid_x == p.centroid_y);
  CHECK(p.bbox_x1 - p.bbox_x0 == 2);
}

TEST_CASE("1x5 line descriptors") {
  const RegionProps p = props_of(block(5, 1));
  CHECK(p.area == 5);
  CHECK(p.perimeter == 5);
  CHECK(p.diameter == 4.0);
  CHECK(p.circularity == doctest::Approx(4.0 * std::numbers::pi * 5.0 / 25.0).epsilon(1e-12));
  CHECK(p.shape_factor == doctest::Approx(0.3125).epsilon(1e-12));
}

TEST_CASE("1x20 line circularity drops below one") {
  const RegionProps p = props_of(block(20, 1));
  CHECK(p.circularity == doctest::Approx(4.0 * std::numbers::pi / 20.0).epsilon(1e-12));
  CHECK(p.circularity < 1.0);
}

TEST_CASE("digital disk r=10") {
  const std::vector<Pixel> disk = disk_pixels(10);
  REQUIRE(disk.size() == 317);  // lattice points with dx^2+dy^2 <= 100
  const RegionProps p = props_of(disk);
  CHECK(p.area == 317);
  CHECK(p.diameter == 20.0);
  CHECK(p.circularity >= 1.0);
  CHECK(p.shape_factor >= 0.70);
  CHECK(p.shape_factor <= 0.90);
}

TEST_CASE("analytic reference shapes hit the published constants") {
  const double pi = std::numbers::pi;
  // Continuous circle, radius 1: area pi, perimeter 2 pi, diameter 2.
  CHECK(std::abs(circularity(pi, 2.0 * pi) - 1.0) < 1e-6);
  CHECK(std::abs(shape_factor(pi, 2.0) - 0.785398) < 1e-6);
  CHECK(std::abs(shape_factor(pi, 2.0) - pi / 4.0) < 1e-12);
  // Continuous unit square: area 1, diagonal sqrt(2).
  CHECK(std::abs(shape_factor(1.0, std::sqrt(2.0)) - 0.5) < 1e-6);
}

TEST_CASE("degenerate denominators throw") {
  CHECK_THROWS_AS(circularity(5.0, 0.0), DegenerateRegion);
  CHECK_THROWS_AS(shape_factor(5.0, 0.0), DegenerateRegion);
}

TEST_CASE("translation leaves all descriptors unchanged") {
  SplitMix64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<Pixel> blob = ts::random_connected_blob(rng, rng.range(1, 200));
    std::vector<Pixel> shifted;
    const int dx = rng.range(1, 50);
    const int dy = rng.range(1, 50);
    for (const Pixel& p : blob) {
      shifted.push_back(Pixel{p.x + dx, p.y + dy});
    }
    REQUIRE(descriptors_equal(props_of(blob), props_of(shifted)));
  }
}

TEST_CASE("90-degree rotation leaves all descriptors unchanged") {
  SplitMix64 rng(4243);
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<Pixel> blob = ts::random_connected_blob(rng, rng.range(1, 200));
    std::vector<Pixel> rotated;
    for (const Pixel& p : blob) {
      rotated.push_back(Pixel{-p.y, p.x});
    }
    REQUIRE(descriptors_equal(props_of(blob), props_of(rotated)));
  }
}

TEST_CASE("perimeter never exceeds area, equal exactly without interior") {
  SplitMix64 rng(4244);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<Pixel> blob = ts::random_connected_blob(rng, rng.range(1, 300));
    const RegionProps p = props_of(blob);
    REQUIRE(p.perimeter <= p.area);
  }
  CHECK(props_of(block(2, 7)).perimeter == 14);   // no interior pixel
  CHECK(props_of(block(3, 7)).perimeter == 16);   // 5 interior pixels
  CHECK(props_of(block(5, 1)).perimeter == 5);
}

TEST_CASE("digital disks stay in theacceptance bands") {
  for (int r = 3; r <= 30; ++r) {
    const RegionProps p = props_of(disk_pixels(r));
    CAPTURE(r);
    REQUIRE(p.circularity >= 1.0);
    REQUIRE(p.shape_factor >= 0.70);
    REQUIRE(p.shape_factor <= 0.90);
  }
}

TEST_CASE("digital squares land in the square band, outside the disk band") {
  for (int s = 8; s <= 30; ++s) {
    const RegionProps p = props_of(block(s, s));
    CAPTURE(s);
    // s^2 / (2 (s-1)^2); the s=8 case peaks at 64/98 ~ 0.6531.
    REQUIRE(p.shape_factor >= 0.50);
    REQUIRE(p.shape_factor <= 0.66);
    REQUIRE((p.shape_factor < 0.70 || p.shape_factor > 0.90));
  }
}

TEST_CASE("lines of four or more pixels fall below the band") {
  for (int n = 4; n <= 40; ++n) {
    const RegionProps p = props_of(block(n, 1));
    CAPTURE(n);
    REQUIRE(p.shape_factor <= 0.45);
  }
}

TEST_CASE("elongated rectangles fail the circularity test") {
  for (int longer = 13; longer <= 40; ++longer) {
    for (int shorter = 1; 3 * shorter <= longer; ++shorter) {
      const RegionProps p = props_of(block(longer, shorter));
      CAPTURE(longer);
      CAPTURE(shorter);
      REQUIRE(p.circularity < 1.0);
    }
  }
}

TEST_CASE("compute_props matches the brute-force oracle on random blobs") {
  SplitMix64 rng(4245);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Pixel> blob = ts::random_connected_blob(rng, rng.range(1, 400));
    const ts::BlobOnMask b = ts::blob_on_mask(blob);
    const RegionProps fast = compute_props(Region{1, b.pixels}, b.mask);
    const RegionProps slow = oracle_props(b.pixels);
    CAPTURE(trial);
    REQUIRE(descriptors_equal(fast, slow));
    REQUIRE(fast.centroid_x == slow.centroid_x);
    REQUIRE(fast.centroid_y == slow.centroid_y);
    REQUIRE(fast.bbox_x0 == slow.bbox_x0);
    REQUIRE(fast.bbox_y1 == slow.bbox_y1);
  }
}
