#include "dhdetect/segmentation.hpp"

#include "dhdetect/kernels.hpp"

namespace dhd {

BinaryMask binarize(const GrayRaster& img, std::uint8_t threshold) {
  BinaryMask mask;
  mask.width = img.width;
  mask.height = img.height;
  mask.bits.resize(img.pixels.size());
  kernels::threshold_le(img.pixels.data(), threshold, mask.bits.data(), img.pixels.size());
  return mask;
}

}  // namespace dhd
