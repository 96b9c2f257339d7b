#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dhd {

struct Pixel {
  int x = 0;
  int y = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Pixel buffers are passed to codecs and kernels as packed byte triples.
static_assert(sizeof(Rgb) == 3);

/// Row-major 8-bit RGB image.
struct RgbRaster {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;

  static RgbRaster filled(int w, int h, Rgb fill) {
    return RgbRaster{w, h, std::vector<Rgb>(static_cast<std::size_t>(w) * h, fill)};
  }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  Rgb& at(int x, int y) { return pixels[index(x, y)]; }
  const Rgb& at(int x, int y) const { return pixels[index(x, y)]; }

  friend bool operator==(const RgbRaster&, const RgbRaster&) = default;
};

/// Row-major 8-bit intensity image, 0 darkest, 255 lightest.
struct GrayRaster {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  static GrayRaster filled(int w, int h, std::uint8_t fill) {
    return GrayRaster{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, fill)};
  }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  std::uint8_t& at(int x, int y) { return pixels[index(x, y)]; }
  std::uint8_t at(int x, int y) const { return pixels[index(x, y)]; }

  friend bool operator==(const GrayRaster&, const GrayRaster&) = default;
};

/// Row-major {0,1} mask; 1 marks a candidate (dark) pixel.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  static BinaryMask zeros(int w, int h) {
    return BinaryMask{w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h, 0)};
  }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  void set(int x, int y, std::uint8_t v) { bits[index(x, y)] = v; }
  /// Off-raster coordinates read as background.
  bool test(int x, int y) const { return in_bounds(x, y) && bits[index(x, y)] != 0; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

}  // namespace dhd
