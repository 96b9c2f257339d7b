#include "dhdetect/detector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "dhdetect/image_io.hpp"
#include "dhdetect/labeling.hpp"
#include "dhdetect/segmentation.hpp"

namespace dhd {

void DetectorConfig::validate() const {
  if (threshold < 0 || threshold > 255) {
    throw std::invalid_argument("threshold must be in 0..255");
  }
  if (!(fovea_fraction > 0.0) || !(fovea_fraction < 1.0)) {
    throw std::invalid_argument("fovea_fraction must be in (0, 1)");
  }
  if (min_area < 1) {
    throw std::invalid_argument("min_area must be >= 1");
  }
  if (connectivity != 4 && connectivity != 8) {
    throw std::invalid_argument("connectivity must be 4 or 8");
  }
  if (!(sf_min > 0.0) || !(sf_min < sf_max)) {
    throw std::invalid_argument("require 0 < sf_min < sf_max");
  }
  if (circ_min < 0.0) {
    throw std::invalid_argument("circ_min must be >= 0");
  }
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Accepted:
      return "accepted";
    case Verdict::RejectedFovea:
      return "rejected_fovea";
    case Verdict::RejectedSmall:
      return "rejected_small";
    case Verdict::RejectedCircularity:
      return "rejected_circularity";
    case Verdict::RejectedShapeFactor:
      return "rejected_shape_factor";
    case Verdict::RejectedDegenerate:
      return "rejected_degenerate";
  }
  return "unknown";
}

Verdict verdict_from_name(std::string_view name) {
  for (Verdict v : {Verdict::Accepted, Verdict::RejectedFovea, Verdict::RejectedSmall,
                    Verdict::RejectedCircularity, Verdict::RejectedShapeFactor,
                    Verdict::RejectedDegenerate}) {
    if (verdict_name(v) == name) {
      return v;
    }
  }
  throw std::invalid_argument("unknown verdict: " + std::string(name));
}

std::int64_t fovea_area_threshold(int width, int height, double fraction) {
  return static_cast<std::int64_t>(
      std::llround(fraction * static_cast<double>(width) * static_cast<double>(height)));
}

Verdict classify_region(const RegionProps& props, std::int64_t fovea_area,
                        const DetectorConfig& cfg) {
  if (props.area >= fovea_area) {
    return Verdict::RejectedFovea;
  }
  if (props.area < cfg.min_area) {
    return Verdict::RejectedSmall;
  }
  if (props.degenerate) {
    return Verdict::RejectedDegenerate;
  }
  if (props.circularity < cfg.circ_min) {
    return Verdict::RejectedCircularity;
  }
  if (props.shape_factor < cfg.sf_min || props.shape_factor > cfg.sf_max) {
    return Verdict::RejectedShapeFactor;
  }
  return Verdict::Accepted;
}

DetectionReport detect(const GrayRaster& img, const DetectorConfig& cfg, std::string image_id) {
  cfg.validate();

  DetectionReport report;
  report.image_id = std::move(image_id);
  report.width = img.width;
  report.height = img.height;
  report.config = cfg;
  report.fovea_area_threshold =
      fovea_area_threshold(img.width, img.height, cfg.fovea_fraction);

  const BinaryMask mask = binarize(img, static_cast<std::uint8_t>(cfg.threshold));
  const LabelMap lm = label_components(mask, cfg.connectivity);
  const std::vector<Region> regions = extract_regions(lm);

  report.detections.reserve(regions.size());
  for (const Region& region : regions) {
    Detection d;
    d.props = compute_props(region, mask);
    d.verdict = classify_region(d.props, report.fovea_area_threshold, cfg);
    d.boundary = boundary_pixels(region, mask);
    if (d.verdict == Verdict::Accepted) {
      ++report.dh_count;
      report.total_dh_area += d.props.area;
    }
    report.detections.push_back(std::move(d));
  }
  return report;
}

DetectionReport detect(const RgbRaster& img, const DetectorConfig& cfg, std::string image_id) {
  return detect(to_grayscale(img), cfg, std::move(image_id));
}

}  // namespace dhd
