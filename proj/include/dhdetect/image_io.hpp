#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dhdetect/raster.hpp"

namespace dhd {

/// Decodes PNG, PPM (P3/P6, maxval 255) or 24-bit uncompressed BMP, sniffed
/// from the payload. Grayscale and palette PNG sources are expanded to RGB.
/// Throws DecodeError on malformed, truncated or unsupported input.
RgbRaster decode_image(std::span<const std::uint8_t> bytes);

/// 8-bit grayscale PNG. decode_image(encode_gray(x)) recovers x exactly
/// (as an RGB raster with r = g = b).
std::vector<std::uint8_t> encode_gray(const GrayRaster& img);

/// 8-bit RGB PNG.
std::vector<std::uint8_t> encode_rgb(const RgbRaster& img);

/// Rec.601 luma, round-half-up: gray = round(0.299 r + 0.587 g + 0.114 b).
GrayRaster to_grayscale(const RgbRaster& img);

}  // namespace dhd
