#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dhd::kernels {

/// Pixel-wise inner loops of the pipeline. Each kernel has a scalar reference
/// implementation plus SIMD variants; the fastest variant supported by the
/// host CPU is selected once at startup. force_backend() overrides the choice,
/// which is how the equivalence tests drive every variant through the same
/// public entry points.
enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
bool backend_available(Backend b);
/// Throws std::invalid_argument if the host cannot run the requested backend.
void force_backend(Backend b);
std::string_view backend_name(Backend b);
std::vector<Backend> available_backends();

/// gray[i] = (299 r + 587 g + 114 b + 500) / 1000 in exact integer arithmetic
/// (round-half-up of the Rec.601 luma). rgb holds 3*n interleaved bytes.
void rgb_to_gray(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t n);

/// out[i] = in[i] <= threshold ? 1 : 0.
void threshold_le(const std::uint8_t* in, std::uint8_t threshold, std::uint8_t* out,
                  std::size_t n);

/// Sum of byte values in 64-bit; on a {0,1} mask this is the foreground count.
std::uint64_t sum_u8(const std::uint8_t* data, std::size_t n);

}  // namespace dhd::kernels
