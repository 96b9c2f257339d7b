// Command-line front end: `dhdetect detect` runs the pipeline on images or
// directories, `dhdetect synth` emits reproducible synthetic scenes with
// ground truth. Exit codes: 0 success, 1 I/O or decode failure, 2 bad flags.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dhdetect/detector.hpp"
#include "dhdetect/error.hpp"
#include "dhdetect/image_io.hpp"
#include "dhdetect/kernels.hpp"
#include "dhdetect/overlay.hpp"
#include "dhdetect/report_json.hpp"
#include "dhdetect/synthgen.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitArgs = 2;

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw std::runtime_error("read failed: " + path.string());
  }
  return bytes;
}

// Temp-file-and-rename so partially written outputs never appear under the
// final name.
void write_file_atomic(const fs::path& path, const void* data, std::size_t size) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot create " + tmp.string());
    }
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

void write_file_atomic(const fs::path& path, const std::string& text) {
  write_file_atomic(path, text.data(), text.size());
}

void write_file_atomic(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  write_file_atomic(path, bytes.data(), bytes.size());
}

bool has_image_extension(const fs::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".ppm" || ext == ".bmp";
}

struct DetectArgs {
  std::string input;
  std::string report_path;
  std::string overlay_path;
  dhd::DetectorConfig config;
};

int run_detect_one(const fs::path& image_path, const DetectArgs& args,
                   const fs::path& report_out, const fs::path& overlay_out) {
  const std::vector<std::uint8_t> bytes = read_file(image_path);
  const dhd::RgbRaster raster = dhd::decode_image(bytes);
  const dhd::DetectionReport report = dhd::detect(raster, args.config, image_path.string());

  std::printf("%s, %lld, %lld\n", image_path.string().c_str(),
              static_cast<long long>(report.dh_count),
              static_cast<long long>(report.total_dh_area));

  if (!report_out.empty()) {
    write_file_atomic(report_out, dhd::to_json(report));
  }
  if (!overlay_out.empty()) {
    write_file_atomic(overlay_out, dhd::encode_rgb(dhd::render_overlay(raster, report)));
  }
  return kExitOk;
}

int run_detect(const DetectArgs& args) {
  const fs::path input(args.input);
  std::error_code ec;
  if (!fs::exists(input, ec) || ec) {
    std::cerr << "dhdetect: no such file or directory: " << input.string() << "\n";
    return kExitIo;
  }

  if (!fs::is_directory(input)) {
    return run_detect_one(input, args, args.report_path, args.overlay_path);
  }

  // Directory mode: --report / --overlay name output directories and files are
  // processed in lexicographic order.
  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(input)) {
    if (entry.is_regular_file() && has_image_extension(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });

  if (!args.report_path.empty()) {
    fs::create_directories(args.report_path);
  }
  if (!args.overlay_path.empty()) {
    fs::create_directories(args.overlay_path);
  }
  for (const fs::path& file : files) {
    fs::path report_out;
    fs::path overlay_out;
    if (!args.report_path.empty()) {
      report_out = fs::path(args.report_path) / (file.stem().string() + ".json");
    }
    if (!args.overlay_path.empty()) {
      overlay_out = fs::path(args.overlay_path) / (file.stem().string() + ".overlay.png");
    }
    const int rc = run_detect_one(file, args, report_out, overlay_out);
    if (rc != kExitOk) {
      return rc;
    }
  }
  return kExitOk;
}

struct SynthArgs {
  std::uint64_t seed = 0;
  std::string size = "466x489";
  int n_dh = 3;
  int n_vessels = 2;
  bool fovea = false;
  std::string out;
};

bool parse_size(const std::string& text, int& width, int& height) {
  int w = 0;
  int h = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%dx%d%c", &w, &h, &tail) != 2 || w < 1 || h < 1) {
    return false;
  }
  width = w;
  height = h;
  return true;
}

int run_synth(const SynthArgs& args) {
  int width = 0;
  int height = 0;
  if (!parse_size(args.size, width, height)) {
    std::cerr << "dhdetect: --size must be WxH with positive integers, got '" << args.size
              << "'\n";
    return kExitArgs;
  }

  const dhd::Scene scene =
      dhd::generate_scene(args.seed, width, height, args.n_dh, args.n_vessels, args.fovea);

  const fs::path out(args.out);
  fs::path truth_path = out;
  truth_path.replace_extension();
  truth_path += ".truth.json";

  write_file_atomic(out, dhd::encode_gray(scene.image));
  write_file_atomic(truth_path, dhd::to_json(scene.truth));
  std::printf("%s, %s\n", out.string().c_str(), truth_path.string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dot-hemorrhage detector for retinal fundus images"};
  app.require_subcommand(1);

  std::string backend;
  app.add_option("--backend", backend, "Force kernel backend: scalar, avx2 or neon")
      ->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  DetectArgs det;
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Detect dot hemorrhages in an image or a directory");
  detect_cmd->add_option("input", det.input, "Image file (PNG/PPM/BMP) or directory")
      ->required();
  detect_cmd->add_option("--threshold", det.config.threshold, "Dark-band intensity cutoff")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  detect_cmd
      ->add_option("--fovea-fraction", det.config.fovea_fraction,
                   "Fovea area as a fraction of image pixels")
      ->capture_default_str();
  detect_cmd->add_option("--min-area", det.config.min_area, "Smallest region kept, in pixels")
      ->check(CLI::Range(1, 1 << 30))
      ->capture_default_str();
  detect_cmd->add_option("--connectivity", det.config.connectivity, "Pixel connectivity")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  detect_cmd->add_option("--circ-min", det.config.circ_min, "Circularity acceptance minimum")
      ->capture_default_str();
  detect_cmd->add_option("--sf-min", det.config.sf_min, "Shape-factor band lower edge")
      ->capture_default_str();
  detect_cmd->add_option("--sf-max", det.config.sf_max, "Shape-factor band upper edge")
      ->capture_default_str();
  detect_cmd->add_option("--report", det.report_path,
                         "Write JSON report here (directory in batch mode)");
  detect_cmd->add_option("--overlay", det.overlay_path,
                         "Write overlay PNG here (directory in batch mode)");

  SynthArgs syn;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic scene plus ground-truth JSON");
  synth_cmd->add_option("--seed", syn.seed, "Scene seed")->capture_default_str();
  synth_cmd->add_option("--size", syn.size, "Canvas size WxH")->capture_default_str();
  synth_cmd->add_option("--dh", syn.n_dh, "Number of dot hemorrhages")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  synth_cmd->add_option("--vessels", syn.n_vessels, "Number of vessel capsules")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  synth_cmd->add_flag("--fovea", syn.fovea, "Include one fovea-scale disk");
  synth_cmd->add_option("--out", syn.out, "Scene PNG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitArgs;
  }

  try {
    if (!backend.empty()) {
      dhd::kernels::Backend b = dhd::kernels::Backend::Scalar;
      if (backend == "avx2") {
        b = dhd::kernels::Backend::Avx2;
      } else if (backend == "neon") {
        b = dhd::kernels::Backend::Neon;
      }
      dhd::kernels::force_backend(b);
    }
    if (detect_cmd->parsed()) {
      det.config.validate();
      return run_detect(det);
    }
    return run_synth(syn);
  } catch (const std::invalid_argument& e) {
    std::cerr << "dhdetect: " << e.what() << "\n";
    return kExitArgs;
  } catch (const dhd::DecodeError& e) {
    std::cerr << "dhdetect: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "dhdetect: " << e.what() << "\n";
    return kExitIo;
  }
}
