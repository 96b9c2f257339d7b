#include "dhdetect/image_io.hpp"

#include <png.h>

#include <cstring>
#include <limits>
#include <string>

#include "dhdetect/error.hpp"
#include "dhdetect/kernels.hpp"

namespace dhd {

namespace {

constexpr std::size_t kMaxDimension = 1 << 16;

void check_dimensions(std::size_t w, std::size_t h) {
  if (w == 0 || h == 0 || w > kMaxDimension || h > kMaxDimension) {
    throw DecodeError("image dimensions out of range: " + std::to_string(w) + "x" +
                      std::to_string(h));
  }
}

// ---------------------------------------------------------------------------
// PNG via libpng, reading from / writing to memory.

struct MemReader {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos;
};

extern "C" void png_mem_read(png_structp png, png_bytep out, png_size_t n) {
  auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
  if (r->pos + n > r->size) {
    png_error(png, "unexpected end of PNG stream");
  }
  std::memcpy(out, r->data + r->pos, n);
  r->pos += n;
}

extern "C" void png_mem_write(png_structp png, png_bytep data, png_size_t n) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + n);
}

extern "C" void png_mem_flush(png_structp) {}

RgbRaster decode_png(std::span<const std::uint8_t> bytes) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) {
    throw DecodeError("libpng: failed to create read struct");
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw DecodeError("libpng: failed to create info struct");
  }

  RgbRaster out;
  std::vector<png_bytep> rows;
  MemReader reader{bytes.data(), bytes.size(), 0};

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DecodeError("malformed PNG payload");
  }

  png_set_read_fn(png, &reader, png_mem_read);
  png_read_info(png, info);

  const png_uint_32 w = png_get_image_width(png, info);
  const png_uint_32 h = png_get_image_height(png, info);
  check_dimensions(w, h);

  // Normalize every supported source to 8-bit RGB.
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(png);
  }
  if (bit_depth == 16) {
    png_set_strip_16(png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  if (png_get_rowbytes(png, info) != static_cast<std::size_t>(w) * 3) {
    png_error(png, "unexpected row layout after normalization");
  }

  out.width = static_cast<int>(w);
  out.height = static_cast<int>(h);
  out.pixels.resize(static_cast<std::size_t>(w) * h);
  rows.resize(h);
  for (png_uint_32 y = 0; y < h; ++y) {
    rows[y] = reinterpret_cast<png_bytep>(out.pixels.data() + static_cast<std::size_t>(y) * w);
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

std::vector<std::uint8_t> encode_png(const std::uint8_t* data, int width, int height,
                                     int color_type, std::size_t row_bytes) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) {
    throw std::runtime_error("libpng: failed to create write struct");
  }
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng: failed to create info struct");
  }

  std::vector<std::uint8_t> out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(height));

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng: write failed");
  }

  png_set_write_fn(png, &out, png_mem_write, png_mem_flush);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
               color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_set_compression_level(png, 6);  // fixed so output bytes are reproducible
  png_write_info(png, info);
  for (int y = 0; y < height; ++y) {
    rows[static_cast<std::size_t>(y)] =
        const_cast<png_bytep>(data + static_cast<std::size_t>(y) * row_bytes);
  }
  png_write_image(png, rows.data());
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
  return out;
}

// ---------------------------------------------------------------------------
// PPM (P3 plain / P6 raw), maxval 255.

struct TokenReader {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  // Skips whitespace and '#' comments; false at end of input.
  bool skip_separators() {
    while (pos < bytes.size()) {
      const char c = static_cast<char>(bytes[pos]);
      if (c == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') {
          ++pos;
        }
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
        ++pos;
      } else {
        break;
      }
    }
    return pos < bytes.size();
  }

  unsigned next_uint(const char* what) {
    if (!skip_separators() || bytes[pos] < '0' || bytes[pos] > '9') {
      throw DecodeError(std::string("PPM: expected ") + what);
    }
    unsigned long v = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
      v = v * 10 + (bytes[pos] - '0');
      if (v > std::numeric_limits<unsigned>::max()) {
        throw DecodeError(std::string("PPM: value overflow in ") + what);
      }
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
};

RgbRaster decode_ppm(std::span<const std::uint8_t> bytes) {
  const bool plain = bytes[1] == '3';
  TokenReader tr{bytes, 2};
  const unsigned w = tr.next_uint("width");
  const unsigned h = tr.next_uint("height");
  const unsigned maxval = tr.next_uint("maxval");
  check_dimensions(w, h);
  if (maxval != 255) {
    throw DecodeError("PPM: only maxval 255 is supported, got " + std::to_string(maxval));
  }

  RgbRaster out;
  out.width = static_cast<int>(w);
  out.height = static_cast<int>(h);
  const std::size_t count = static_cast<std::size_t>(w) * h;
  out.pixels.resize(count);

  if (plain) {
    for (std::size_t i = 0; i < count; ++i) {
      for (int c = 0; c < 3; ++c) {
        const unsigned v = tr.next_uint("sample");
        if (v > maxval) {
          throw DecodeError("PPM: sample exceeds maxval");
        }
        (&out.pixels[i].r)[c] = static_cast<std::uint8_t>(v);
      }
    }
  } else {
    // Exactly one whitespace byte separates the header from the raster.
    if (tr.pos >= bytes.size()) {
      throw DecodeError("PPM: truncated header");
    }
    ++tr.pos;
    if (bytes.size() - tr.pos < count * 3) {
      throw DecodeError("PPM: truncated pixel data");
    }
    std::memcpy(out.pixels.data(), bytes.data() + tr.pos, count * 3);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BMP, 24-bit uncompressed only.

std::uint32_t read_u32le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16le(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

RgbRaster decode_bmp(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 54) {
    throw DecodeError("BMP: truncated header");
  }
  const std::uint32_t data_offset = read_u32le(bytes.data() + 10);
  const std::uint32_t header_size = read_u32le(bytes.data() + 14);
  if (header_size < 40) {
    throw DecodeError("BMP: unsupported header version");
  }
  const std::int32_t width = static_cast<std::int32_t>(read_u32le(bytes.data() + 18));
  const std::int32_t raw_height = static_cast<std::int32_t>(read_u32le(bytes.data() + 22));
  const std::uint16_t planes = read_u16le(bytes.data() + 26);
  const std::uint16_t bit_count = read_u16le(bytes.data() + 28);
  const std::uint32_t compression = read_u32le(bytes.data() + 30);

  if (planes != 1 || bit_count != 24 || compression != 0) {
    throw DecodeError("BMP: only 24-bit uncompressed images are supported");
  }
  const bool top_down = raw_height < 0;
  const std::int64_t height = top_down ? -static_cast<std::int64_t>(raw_height) : raw_height;
  if (width <= 0 || height <= 0) {
    throw DecodeError("BMP: invalid dimensions");
  }
  check_dimensions(static_cast<std::size_t>(width), static_cast<std::size_t>(height));

  const std::size_t row_stride = (static_cast<std::size_t>(width) * 3 + 3) & ~std::size_t{3};
  if (data_offset > bytes.size() ||
      bytes.size() - data_offset < row_stride * static_cast<std::size_t>(height)) {
    throw DecodeError("BMP: truncated pixel data");
  }

  RgbRaster out;
  out.width = width;
  out.height = static_cast<int>(height);
  out.pixels.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (std::int64_t y = 0; y < height; ++y) {
    const std::int64_t src_row = top_down ? y : height - 1 - y;
    const std::uint8_t* src = bytes.data() + data_offset + row_stride * src_row;
    Rgb* dst = out.pixels.data() + static_cast<std::size_t>(y) * width;
    for (std::int32_t x = 0; x < width; ++x) {
      dst[x] = Rgb{src[3 * x + 2], src[3 * x + 1], src[3 * x + 0]};  // stored BGR
    }
  }
  return out;
}

}  // namespace

RgbRaster decode_image(std::span<const std::uint8_t> bytes) {
  static const std::uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '3' || bytes[1] == '6')) {
    return decode_ppm(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
    return decode_bmp(bytes);
  }
  throw DecodeError("unrecognized image format (expected PNG, PPM P3/P6, or BMP)");
}

std::vector<std::uint8_t> encode_gray(const GrayRaster& img) {
  return encode_png(img.pixels.data(), img.width, img.height, PNG_COLOR_TYPE_GRAY,
                    static_cast<std::size_t>(img.width));
}

std::vector<std::uint8_t> encode_rgb(const RgbRaster& img) {
  return encode_png(&img.pixels.data()->r, img.width, img.height, PNG_COLOR_TYPE_RGB,
                    static_cast<std::size_t>(img.width) * 3);
}

GrayRaster to_grayscale(const RgbRaster& img) {
  GrayRaster out;
  out.width = img.width;
  out.height = img.height;
  out.pixels.resize(img.pixels.size());
  kernels::rgb_to_gray(&img.pixels.data()->r, out.pixels.data(), img.pixels.size());
  return out;
}

}  // namespace dhd
