#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dhdetect/raster.hpp"
#include "dhdetect/regionprops.hpp"

namespace dhd {

struct DetectorConfig {
  int threshold = 12;             // inclusive intensity cutoff for the dark band
  double fovea_fraction = 0.0046; // fovea-scale area as a fraction of image pixels
  int min_area = 4;               // specks below this have meaningless descriptors
  int connectivity = 8;           // keeps diagonal vessel pixels joined
  double circ_min = 1.0;
  double sf_min = 0.70;
  double sf_max = 0.90;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

enum class Verdict {
  Accepted,
  RejectedFovea,
  RejectedSmall,
  RejectedCircularity,
  RejectedShapeFactor,
  RejectedDegenerate,
};

std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

struct Detection {
  RegionProps props;
  Verdict verdict = Verdict::Accepted;
  /// Region pixels with a 4-neighbor outside the mask; drives overlay
  /// rendering and is not serialized.
  std::vector<Pixel> boundary;
};

struct DetectionReport {
  std::string image_id;
  int width = 0;
  int height = 0;
  DetectorConfig config;
  std::int64_t fovea_area_threshold = 0;
  std::vector<Detection> detections;  // every labeled region, accepted or not
  std::int64_t dh_count = 0;
  std::int64_t total_dh_area = 0;
};

/// round(fraction * width * height): the area at which a dark blob is treated
/// as fovea-scale rather than a hemorrhage.
std::int64_t fovea_area_threshold(int width, int height, double fraction);

/// Applies the area, circularity and shape-factor tests in pipeline order;
/// the verdict records the first failing test.
Verdict classify_region(const RegionProps& props, std::int64_t fovea_area,
                        const DetectorConfig& cfg);

DetectionReport detect(const GrayRaster& img, const DetectorConfig& cfg,
                       std::string image_id = "");
DetectionReport detect(const RgbRaster& img, const DetectorConfig& cfg,
                       std::string image_id = "");

}  // namespace dhd
