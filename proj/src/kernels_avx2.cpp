#include "kernels_backends.hpp"

#if DHD_KERNELS_X86

#include <immintrin.h>

namespace dhd::kernels::avx2 {

namespace {

// Gathers one channel of 8 interleaved RGB pixels (24 bytes split across a
// 16-byte and an 8-byte load) into the low 8 bytes of a vector.
inline __m128i gather_channel(__m128i lo, __m128i hi, __m128i mask_lo, __m128i mask_hi) {
  return _mm_or_si128(_mm_shuffle_epi8(lo, mask_lo), _mm_shuffle_epi8(hi, mask_hi));
}

}  // namespace

void rgb_to_gray(const uint8_t* rgb, uint8_t* gray, size_t n) {
  const __m128i r_lo = _mm_setr_epi8(0, 3, 6, 9, 12, 15, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
  const __m128i r_hi = _mm_setr_epi8(-1, -1, -1, -1, -1, -1, 2, 5, -1, -1, -1, -1, -1, -1, -1, -1);
  const __m128i g_lo = _mm_setr_epi8(1, 4, 7, 10, 13, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
  const __m128i g_hi = _mm_setr_epi8(-1, -1, -1, -1, -1, 0, 3, 6, -1, -1, -1, -1, -1, -1, -1, -1);
  const __m128i b_lo = _mm_setr_epi8(2, 5, 8, 11, 14, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);
  const __m128i b_hi = _mm_setr_epi8(-1, -1, -1, -1, -1, 1, 4, 7, -1, -1, -1, -1, -1, -1, -1, -1);

  const __m256i w_r = _mm256_set1_epi32(299);
  const __m256i w_g = _mm256_set1_epi32(587);
  const __m256i w_b = _mm256_set1_epi32(114);
  const __m256i half = _mm256_set1_epi32(500);
  const __m256 kilo = _mm256_set1_ps(1000.0f);
  // Per 128-bit lane: pick byte 0 of each 32-bit element.
  const __m256i pack_mask = _mm256_setr_epi8(0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                                             -1, -1, 0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1,
                                             -1, -1, -1, -1);

  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const uint8_t* p = rgb + 3 * i;
    const __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
    const __m128i hi = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(p + 16));

    const __m256i r = _mm256_cvtepu8_epi32(gather_channel(lo, hi, r_lo, r_hi));
    const __m256i g = _mm256_cvtepu8_epi32(gather_channel(lo, hi, g_lo, g_hi));
    const __m256i b = _mm256_cvtepu8_epi32(gather_channel(lo, hi, b_lo, b_hi));

    __m256i acc = _mm256_mullo_epi32(r, w_r);
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(g, w_g));
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(b, w_b));
    acc = _mm256_add_epi32(acc, half);

    // acc <= 255500 < 2^24, so the float conversion is exact, the correctly
    // rounded quotient never crosses an integer from below, and truncation
    // equals the integer division of the scalar kernel.
    const __m256i q = _mm256_cvttps_epi32(_mm256_div_ps(_mm256_cvtepi32_ps(acc), kilo));

    const __m256i bytes = _mm256_shuffle_epi8(q, pack_mask);
    const uint32_t lo4 = static_cast<uint32_t>(_mm_cvtsi128_si32(_mm256_castsi256_si128(bytes)));
    const uint32_t hi4 =
        static_cast<uint32_t>(_mm_cvtsi128_si32(_mm256_extracti128_si256(bytes, 1)));
    __builtin_memcpy(gray + i, &lo4, 4);
    __builtin_memcpy(gray + i + 4, &hi4, 4);
  }
  if (i < n) {
    scalar::rgb_to_gray(rgb + 3 * i, gray + i, n - i);
  }
}

void threshold_le(const uint8_t* in, uint8_t threshold, uint8_t* out, size_t n) {
  const __m256i t = _mm256_set1_epi8(static_cast<char>(threshold));
  const __m256i one = _mm256_set1_epi8(1);
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    // No unsigned compare on AVX2; min(v,t) == v is exactly v <= t.
    const __m256i le = _mm256_cmpeq_epi8(_mm256_min_epu8(v, t), v);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_and_si256(le, one));
  }
  if (i < n) {
    scalar::threshold_le(in + i, threshold, out + i, n - i);
  }
}

uint64_t sum_u8(const uint8_t* data, size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = zero;
  size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    sum += data[i];
  }
  return sum;
}

}  // namespace dhd::kernels::avx2

#endif  // DHD_KERNELS_X86
