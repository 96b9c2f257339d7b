#include <doctest.h>

#include <vector>

#include "dhdetect/kernels.hpp"
#include "dhdetect/rng.hpp"

using dhd::SplitMix64;
namespace kernels = dhd::kernels;

namespace {

// Restores the automatically selected backend when a test is done forcing.
struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::force_backend(saved); }
};

std::vector<std::uint8_t> random_bytes(SplitMix64& rng, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) {
    b = static_cast<std::uint8_t>(rng.next());
  }
  return out;
}

std::uint8_t reference_gray(unsigned r, unsigned g, unsigned b) {
  return static_cast<std::uint8_t>((299 * r + 587 * g + 114 * b + 500) / 1000);
}

const std::vector<std::size_t> kLengths = {0, 1, 2, 3, 7, 8, 9, 15, 16, 17, 31, 32, 33, 100, 1023, 4096};

}  // namespace

TEST_CASE("gray kernel matches the exact integer reference on every backend") {
  BackendGuard guard;
  SplitMix64 rng(0xC0FFEE);
  for (kernels::Backend backend : kernels::available_backends()) {
    CAPTURE(kernels::backend_name(backend));
    kernels::force_backend(backend);
    for (std::size_t n : kLengths) {
      const std::vector<std::uint8_t> rgb = random_bytes(rng, 3 * n);
      std::vector<std::uint8_t> gray(n, 0xAA);
      kernels::rgb_to_gray(rgb.data(), gray.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(gray[i] == reference_gray(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]));
      }
    }
  }
}

TEST_CASE("gray kernel handles rounding ties and channel extremes") {
  BackendGuard guard;
  // (0,0,250) sits exactly on a .5 boundary: 0.114*250 = 28.5 rounds up.
  std::vector<std::uint8_t> rgb;
  std::vector<std::uint8_t> expected;
  auto push = [&](unsigned r, unsigned g, unsigned b) {
    rgb.insert(rgb.end(), {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                           static_cast<std::uint8_t>(b)});
    expected.push_back(reference_gray(r, g, b));
  };
  push(0, 0, 250);
  push(255, 0, 0);
  push(0, 255, 0);
  push(0, 0, 255);
  push(255, 255, 255);
  push(0, 0, 0);
  for (unsigned v = 0; v < 256; ++v) {
    push(v, 0, 0);
    push(0, v, 0);
    push(0, 0, v);
    push(v, v, v);
  }
  REQUIRE(expected[0] == 29);
  REQUIRE(expected[1] == 76);
  REQUIRE(expected[4] == 255);

  const std::size_t n = expected.size();
  for (kernels::Backend backend : kernels::available_backends()) {
    CAPTURE(kernels::backend_name(backend));
    kernels::force_backend(backend);
    std::vector<std::uint8_t> gray(n);
    kernels::rgb_to_gray(rgb.data(), gray.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      REQUIRE(gray[i] == expected[i]);
    }
  }
}

TEST_CASE("threshold kernel agrees across backends and respects the inclusive edge") {
  BackendGuard guard;
  SplitMix64 rng(0xBEEF);
  for (kernels::Backend backend : kernels::available_backends()) {
    CAPTURE(kernels::backend_name(backend));
    kernels::force_backend(backend);
    for (std::size_t n : kLengths) {
      const std::vector<std::uint8_t> in = random_bytes(rng, n);
      for (std::uint8_t t : {std::uint8_t{0}, std::uint8_t{12}, std::uint8_t{128},
                             std::uint8_t{254}, std::uint8_t{255}}) {
        std::vector<std::uint8_t> out(n, 0xAA);
        kernels::threshold_le(in.data(), t, out.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
          REQUIRE(out[i] == (in[i] <= t ? 1 : 0));
        }
      }
    }
  }

  // value == threshold is foreground
  const std::uint8_t v12 = 12;
  std::uint8_t bit = 0;
  kernels::threshold_le(&v12, 12, &bit, 1);
  REQUIRE(bit == 1);
  const std::uint8_t v13 = 13;
  kernels::threshold_le(&v13, 12, &bit, 1);
  REQUIRE(bit == 0);
}

TEST_CASE("byte-sum kernel agrees across backends") {
  BackendGuard guard;
  SplitMix64 rng(0xF00D);
  for (std::size_t n : kLengths) {
    const std::vector<std::uint8_t> data = random_bytes(rng, n);
    std::uint64_t reference = 0;
    for (std::uint8_t b : data) {
      reference += b;
    }
    for (kernels::Backend backend : kernels::available_backends()) {
      CAPTURE(kernels::backend_name(backend));
      kernels::force_backend(backend);
      REQUIRE(kernels::sum_u8(data.data(), n) == reference);
    }
  }
}

TEST_CASE("forcing an unavailable backend throws") {
  REQUIRE(kernels::backend_available(kernels::Backend::Scalar));
#if defined(__x86_64__) || defined(__i386__)
  REQUIRE_FALSE(kernels::backend_available(kernels::Backend::Neon));
  REQUIRE_THROWS_AS(kernels::force_backend(kernels::Backend::Neon), std::invalid_argument);
#endif
}
