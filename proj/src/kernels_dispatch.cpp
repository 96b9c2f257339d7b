#include "dhdetect/kernels.hpp"

#include <stdexcept>
#include <string>

#include "kernels_backends.hpp"

namespace dhd::kernels {

namespace {

struct KernelTable {
  void (*rgb_to_gray)(const uint8_t*, uint8_t*, size_t);
  void (*threshold_le)(const uint8_t*, uint8_t, uint8_t*, size_t);
  uint64_t (*sum_u8)(const uint8_t*, size_t);
};

constexpr KernelTable kScalarTable{scalar::rgb_to_gray, scalar::threshold_le, scalar::sum_u8};

#if DHD_KERNELS_X86
constexpr KernelTable kAvx2Table{avx2::rgb_to_gray, avx2::threshold_le, avx2::sum_u8};
#endif
#if DHD_KERNELS_ARM
constexpr KernelTable kNeonTable{neon::rgb_to_gray, neon::threshold_le, neon::sum_u8};
#endif

Backend detect_best() {
#if DHD_KERNELS_X86
  if (__builtin_cpu_supports("avx2")) {
    return Backend::Avx2;
  }
#elif DHD_KERNELS_ARM
  return Backend::Neon;
#endif
  return Backend::Scalar;
}

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &kScalarTable;
    case Backend::Avx2:
#if DHD_KERNELS_X86
      if (__builtin_cpu_supports("avx2")) {
        return &kAvx2Table;
      }
#endif
      return nullptr;
    case Backend::Neon:
#if DHD_KERNELS_ARM
      return &kNeonTable;
#endif
      return nullptr;
  }
  return nullptr;
}

struct State {
  Backend backend = detect_best();
  const KernelTable* table = table_for(backend);
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Backend active_backend() { return state().backend; }

bool backend_available(Backend b) { return table_for(b) != nullptr; }

void force_backend(Backend b) {
  const KernelTable* t = table_for(b);
  if (t == nullptr) {
    throw std::invalid_argument("kernel backend not available on this host: " +
                                std::string(backend_name(b)));
  }
  state().backend = b;
  state().table = t;
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (backend_available(b)) {
      out.push_back(b);
    }
  }
  return out;
}

void rgb_to_gray(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t n) {
  state().table->rgb_to_gray(rgb, gray, n);
}

void threshold_le(const std::uint8_t* in, std::uint8_t threshold, std::uint8_t* out,
                  std::size_t n) {
  state().table->threshold_le(in, threshold, out, n);
}

std::uint64_t sum_u8(const std::uint8_t* data, std::size_t n) {
  return state().table->sum_u8(data, n);
}

}  // namespace dhd::kernels
