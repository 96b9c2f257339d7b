#include "kernels_backends.hpp"

#if DHD_KERNELS_ARM

#include <arm_neon.h>

namespace dhd::kernels::neon {

namespace {

// (299 r + 587 g + 114 b + 500) / 1000 on four u32 lanes, via the exact float
// path (numerator < 2^24, see the scalar kernel).
inline uint32x4_t luma_div1000(uint32x4_t r, uint32x4_t g, uint32x4_t b) {
  uint32x4_t acc = vmulq_n_u32(r, 299);
  acc = vmlaq_n_u32(acc, g, 587);
  acc = vmlaq_n_u32(acc, b, 114);
  acc = vaddq_u32(acc, vdupq_n_u32(500));
  return vcvtq_u32_f32(vdivq_f32(vcvtq_f32_u32(acc), vdupq_n_f32(1000.0f)));
}

}  // namespace

void rgb_to_gray(const uint8_t* rgb, uint8_t* gray, size_t n) {
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16x3_t px = vld3q_u8(rgb + 3 * i);

    const uint16x8_t r_lo = vmovl_u8(vget_low_u8(px.val[0]));
    const uint16x8_t r_hi = vmovl_u8(vget_high_u8(px.val[0]));
    const uint16x8_t g_lo = vmovl_u8(vget_low_u8(px.val[1]));
    const uint16x8_t g_hi = vmovl_u8(vget_high_u8(px.val[1]));
    const uint16x8_t b_lo = vmovl_u8(vget_low_u8(px.val[2]));
    const uint16x8_t b_hi = vmovl_u8(vget_high_u8(px.val[2]));

    const uint32x4_t q0 = luma_div1000(vmovl_u16(vget_low_u16(r_lo)),
                                       vmovl_u16(vget_low_u16(g_lo)),
                                       vmovl_u16(vget_low_u16(b_lo)));
    const uint32x4_t q1 = luma_div1000(vmovl_u16(vget_high_u16(r_lo)),
                                       vmovl_u16(vget_high_u16(g_lo)),
                                       vmovl_u16(vget_high_u16(b_lo)));
    const uint32x4_t q2 = luma_div1000(vmovl_u16(vget_low_u16(r_hi)),
                                       vmovl_u16(vget_low_u16(g_hi)),
                                       vmovl_u16(vget_low_u16(b_hi)));
    const uint32x4_t q3 = luma_div1000(vmovl_u16(vget_high_u16(r_hi)),
                                       vmovl_u16(vget_high_u16(g_hi)),
                                       vmovl_u16(vget_high_u16(b_hi)));

    const uint16x8_t lo = vcombine_u16(vmovn_u32(q0), vmovn_u32(q1));
    const uint16x8_t hi = vcombine_u16(vmovn_u32(q2), vmovn_u32(q3));
    vst1q_u8(gray + i, vcombine_u8(vmovn_u16(lo), vmovn_u16(hi)));
  }
  if (i < n) {
    scalar::rgb_to_gray(rgb + 3 * i, gray + i, n - i);
  }
}

void threshold_le(const uint8_t* in, uint8_t threshold, uint8_t* out, size_t n) {
  const uint8x16_t t = vdupq_n_u8(threshold);
  const uint8x16_t one = vdupq_n_u8(1);
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t v = vld1q_u8(in + i);
    vst1q_u8(out + i, vandq_u8(vcleq_u8(v, t), one));
  }
  if (i < n) {
    scalar::threshold_le(in + i, threshold, out + i, n - i);
  }
}

uint64_t sum_u8(const uint8_t* data, size_t n) {
  uint64_t sum = 0;
  size_t i = 0;
  while (i + 16 <= n) {
    // u32 lane accumulators hold at most 510 per step; fold well before the
    // 2^32 ceiling.
    const size_t block_end = i + ((n - i) / 16 > 65536 ? size_t{65536} * 16 : (n - i) / 16 * 16);
    uint32x4_t acc = vdupq_n_u32(0);
    for (; i < block_end; i += 16) {
      acc = vpadalq_u16(acc, vpaddlq_u8(vld1q_u8(data + i)));
    }
    const uint64x2_t wide = vpaddlq_u32(acc);
    sum += vgetq_lane_u64(wide, 0) + vgetq_lane_u64(wide, 1);
  }
  for (; i < n; ++i) {
    sum += data[i];
  }
  return sum;
}

}  // namespace dhd::kernels::neon

#endif  // DHD_KERNELS_ARM
