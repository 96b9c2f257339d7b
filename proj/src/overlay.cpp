#include "dhdetect/overlay.hpp"

#include <string>

#include "dhdetect/error.hpp"

namespace dhd {

RgbRaster render_overlay(const RgbRaster& base, const DetectionReport& report) {
  RgbRaster out = base;
  for (const Detection& d : report.detections) {
    for (const Pixel& p : d.boundary) {
      if (!base.in_bounds(p.x, p.y)) {
        throw BoundsError("overlay coordinate (" + std::to_string(p.x) + "," +
                          std::to_string(p.y) + ") outside raster " +
                          std::to_string(base.width) + "x" + std::to_string(base.height));
      }
    }
    if (d.verdict == Verdict::Accepted) {
      for (const Pixel& p : d.boundary) {
        out.at(p.x, p.y) = Rgb{255, 0, 0};
      }
    } else if (d.verdict == Verdict::RejectedFovea) {
      for (const Pixel& p : d.boundary) {
        out.at(p.x, p.y) = Rgb{0, 0, 255};
      }
    }
  }
  return out;
}

}  // namespace dhd
