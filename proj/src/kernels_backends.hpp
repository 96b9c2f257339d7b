#pragma once

// Raw per-backend kernel entry points. Only the dispatcher and the backend
// translation units include this header. Kept to <stdint.h>/<stddef.h> so the
// NEON unit can be syntax-checked against a bare aarch64 target.

#include <stddef.h>
#include <stdint.h>

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)
#define DHD_KERNELS_X86 1
#else
#define DHD_KERNELS_X86 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON) || defined(__ARM_NEON__)
#define DHD_KERNELS_ARM 1
#else
#define DHD_KERNELS_ARM 0
#endif

namespace dhd::kernels {

namespace scalar {
void rgb_to_gray(const uint8_t* rgb, uint8_t* gray, size_t n);
void threshold_le(const uint8_t* in, uint8_t threshold, uint8_t* out, size_t n);
uint64_t sum_u8(const uint8_t* data, size_t n);
}  // namespace scalar

#if DHD_KERNELS_X86
namespace avx2 {
void rgb_to_gray(const uint8_t* rgb, uint8_t* gray, size_t n);
void threshold_le(const uint8_t* in, uint8_t threshold, uint8_t* out, size_t n);
uint64_t sum_u8(const uint8_t* data, size_t n);
}  // namespace avx2
#endif

#if DHD_KERNELS_ARM
namespace neon {
void rgb_to_gray(const uint8_t* rgb, uint8_t* gray, size_t n);
void threshold_le(const uint8_t* in, uint8_t threshold, uint8_t* out, size_t n);
uint64_t sum_u8(const uint8_t* data, size_t n);
}  // namespace neon
#endif

}  // namespace dhd::kernels
