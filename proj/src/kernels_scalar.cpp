#include "kernels_backends.hpp"

namespace dhd::kernels::scalar {

void rgb_to_gray(const uint8_t* rgb, uint8_t* gray, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const uint32_t r = rgb[3 * i + 0];
    const uint32_t g = rgb[3 * i + 1];
    const uint32_t b = rgb[3 * i + 2];
    // 0.299/0.587/0.114 are exact thousandths, so this integer form is the
    // exact round-half-up of the real-valued luma. Max numerator 255500.
    gray[i] = static_cast<uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
  }
}

void threshold_le(const uint8_t* in, uint8_t threshold, uint8_t* out, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = in[i] <= threshold ? 1 : 0;
  }
}

uint64_t sum_u8(const uint8_t* data, size_t n) {
  uint64_t sum = 0;
  for (size_t i = 0; i < n; ++i) {
    sum += data[i];
  }
  return sum;
}

}  // namespace dhd::kernels::scalar
