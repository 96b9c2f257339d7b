#include "dhdetect/report_json.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace dhd {

namespace {

void append_escaped(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  out += buf;
}

double parsed_double(const nlohmann::json& j, const char* key) {
  return j.at(key).get<double>();
}

}  // namespace

std::string to_json(const DetectionReport& report) {
  std::string out;
  out.reserve(512 + report.detections.size() * 220);

  out += "{\"image\": ";
  append_escaped(out, report.image_id);
  out += ", \"width\": " + std::to_string(report.width);
  out += ", \"height\": " + std::to_string(report.height);
  out += ", \"config\": {\"threshold\": " + std::to_string(report.config.threshold);
  out += ", \"fovea_fraction\": ";
  append_double(out, report.config.fovea_fraction);
  out += ", \"min_area\": " + std::to_string(report.config.min_area);
  out += ", \"connectivity\": " + std::to_string(report.config.connectivity);
  out += ", \"circ_min\": ";
  append_double(out, report.config.circ_min);
  out += ", \"sf_min\": ";
  append_double(out, report.config.sf_min);
  out += ", \"sf_max\": ";
  append_double(out, report.config.sf_max);
  out += "}, \"fovea_area_threshold\": " + std::to_string(report.fovea_area_threshold);
  out += ", \"dh_count\": " + std::to_string(report.dh_count);
  out += ", \"total_dh_area\": " + std::to_string(report.total_dh_area);
  out += ", \"detections\": [";
  bool first = true;
  for (const Detection& d : report.detections) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += "{\"label\": " + std::to_string(d.props.label);
    out += ", \"verdict\": ";
    append_escaped(out, verdict_name(d.verdict));
    out += ", \"area\": " + std::to_string(d.props.area);
    out += ", \"perimeter\": " + std::to_string(d.props.perimeter);
    out += ", \"diameter\": ";
    append_double(out, d.props.diameter);
    out += ", \"circularity\": ";
    append_double(out, d.props.circularity);
    out += ", \"shape_factor\": ";
    append_double(out, d.props.shape_factor);
    out += ", \"centroid\": [";
    append_double(out, d.props.centroid_x);
    out += ", ";
    append_double(out, d.props.centroid_y);
    out += "], \"bbox\": [" + std::to_string(d.props.bbox_x0) + ", " +
           std::to_string(d.props.bbox_y0) + ", " + std::to_string(d.props.bbox_x1) + ", " +
           std::to_string(d.props.bbox_y1) + "]}";
  }
  out += "]}\n";
  return out;
}

DetectionReport report_from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);

  DetectionReport report;
  report.image_id = j.at("image").get<std::string>();
  report.width = j.at("width").get<int>();
  report.height = j.at("height").get<int>();

  const nlohmann::json& cfg = j.at("config");
  report.config.threshold = cfg.at("threshold").get<int>();
  report.config.fovea_fraction = parsed_double(cfg, "fovea_fraction");
  report.config.min_area = cfg.at("min_area").get<int>();
  report.config.connectivity = cfg.at("connectivity").get<int>();
  report.config.circ_min = parsed_double(cfg, "circ_min");
  report.config.sf_min = parsed_double(cfg, "sf_min");
  report.config.sf_max = parsed_double(cfg, "sf_max");

  report.fovea_area_threshold = j.at("fovea_area_threshold").get<std::int64_t>();
  report.dh_count = j.at("dh_count").get<std::int64_t>();
  report.total_dh_area = j.at("total_dh_area").get<std::int64_t>();

  for (const nlohmann::json& dj : j.at("detections")) {
    Detection d;
    d.props.label = dj.at("label").get<std::int32_t>();
    d.verdict = verdict_from_name(dj.at("verdict").get<std::string>());
    d.props.area = dj.at("area").get<std::int64_t>();
    d.props.perimeter = dj.at("perimeter").get<std::int64_t>();
    d.props.diameter = parsed_double(dj, "diameter");
    d.props.circularity = parsed_double(dj, "circularity");
    d.props.shape_factor = parsed_double(dj, "shape_factor");
    d.props.degenerate = d.props.diameter == 0.0;
    const nlohmann::json& centroid = dj.at("centroid");
    d.props.centroid_x = centroid.at(0).get<double>();
    d.props.centroid_y = centroid.at(1).get<double>();
    const nlohmann::json& bbox = dj.at("bbox");
    d.props.bbox_x0 = bbox.at(0).get<int>();
    d.props.bbox_y0 = bbox.at(1).get<int>();
    d.props.bbox_x1 = bbox.at(2).get<int>();
    d.props.bbox_y1 = bbox.at(3).get<int>();
    report.detections.push_back(std::move(d));
  }
  return report;
}

std::string to_json(const SceneTruth& truth) {
  nlohmann::ordered_json j;
  j["seed"] = truth.seed;
  j["width"] = truth.width;
  j["height"] = truth.height;
  j["background"] = truth.background;
  j["shapes"] = nlohmann::ordered_json::array();
  for (const ShapeSpec& spec : truth.shapes) {
    nlohmann::ordered_json sj;
    if (const auto* disk = std::get_if<Disk>(&spec.shape)) {
      sj["kind"] = "disk";
      sj["cx"] = disk->cx;
      sj["cy"] = disk->cy;
      sj["r"] = disk->r;
    } else if (const auto* rect = std::get_if<RectShape>(&spec.shape)) {
      sj["kind"] = "rect";
      sj["x0"] = rect->x0;
      sj["y0"] = rect->y0;
      sj["x1"] = rect->x1;
      sj["y1"] = rect->y1;
    } else {
      const Capsule& c = std::get<Capsule>(spec.shape);
      sj["kind"] = "capsule";
      sj["x0"] = c.x0;
      sj["y0"] = c.y0;
      sj["x1"] = c.x1;
      sj["y1"] = c.y1;
      sj["half_width"] = c.half_width;
    }
    sj["intensity"] = spec.intensity;
    j["shapes"].push_back(std::move(sj));
  }
  j["dh_labels"] = truth.dh_labels;
  return j.dump() + "\n";
}

SceneTruth truth_from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);

  SceneTruth truth;
  truth.seed = j.at("seed").get<std::uint64_t>();
  truth.width = j.at("width").get<int>();
  truth.height = j.at("height").get<int>();
  truth.background = j.at("background").get<std::uint8_t>();
  for (const nlohmann::json& sj : j.at("shapes")) {
    ShapeSpec spec;
    const std::string kind = sj.at("kind").get<std::string>();
    if (kind == "disk") {
      spec.shape = Disk{sj.at("cx").get<int>(), sj.at("cy").get<int>(), sj.at("r").get<int>()};
    } else if (kind == "rect") {
      spec.shape = RectShape{sj.at("x0").get<int>(), sj.at("y0").get<int>(),
                             sj.at("x1").get<int>(), sj.at("y1").get<int>()};
    } else if (kind == "capsule") {
      spec.shape = Capsule{sj.at("x0").get<int>(), sj.at("y0").get<int>(),
                           sj.at("x1").get<int>(), sj.at("y1").get<int>(),
                           sj.at("half_width").get<int>()};
    } else {
      throw std::invalid_argument("unknown shape kind: " + kind);
    }
    spec.intensity = sj.at("intensity").get<std::uint8_t>();
    truth.shapes.push_back(spec);
  }
  truth.dh_labels = j.at("dh_labels").get<std::vector<std::size_t>>();
  return truth;
}

}  // namespace dhd
