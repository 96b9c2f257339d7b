#pragma once

#include <string>
#include <string_view>

#include "dhdetect/detector.hpp"
#include "dhdetect/synthgen.hpp"

namespace dhd {

/// Detection report in the stable on-disk schema: fixed key order, floats
/// printed with 6 significant digits.
std::string to_json(const DetectionReport& report);

/// Parses a report serialized by to_json; boundary pixel lists are not part
/// of the schema, so re-serializing the result reproduces the input bytes.
DetectionReport report_from_json(std::string_view text);

std::string to_json(const SceneTruth& truth);
SceneTruth truth_from_json(std::string_view text);

}  // namespace dhd
