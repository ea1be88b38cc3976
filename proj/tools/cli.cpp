#include "cli.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "tgglines/error.hpp"
#include "tgglines/evaluation.hpp"
#include "tgglines/json_io.hpp"
#include "tgglines/pipeline.hpp"
#include "tgglines/raster_io.hpp"
#include "tgglines/svg.hpp"

namespace tgglines::cli {

namespace fs = std::filesystem;

namespace {

struct Settings {
  std::vector<fs::path> inputs;
  fs::path output;
  fs::path gt;
  fs::path background;
  int threshold = 128;
  bool invert = false;
  std::string format = "json";
  EvalConfig eval;
  unsigned jobs = 1;
};

std::shared_ptr<spdlog::logger> logger() {
  static std::once_flag once;
  static std::shared_ptr<spdlog::logger> log;
  std::call_once(once, [] {
    log = spdlog::get("tgglines");
    if (!log) log = spdlog::stderr_color_mt("tgglines");
    log->set_pattern("[%l] %v");
    const char* env = std::getenv("TGGLINES_LOG");
    log->set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
  });
  return log;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::invalid_argument ? kUsage : kIo;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + p.string());
  out << text;
  if (!out.flush()) throw Error(ErrorCode::io, "cannot write " + p.string());
}

bool is_json(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".json";
}

bool is_image(const fs::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".pbm" || ext == ".pgm";
}

BinaryImage load_binary(const fs::path& p, const Settings& s) {
  const auto bits = binarize(load_image(p), static_cast<std::uint8_t>(s.threshold));
  return s.invert ? invert(bits) : bits;
}

// Segments plus frame size, from a detection JSON or by running detect on an image.
struct Loaded {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<TaggedSegment> segments;
};

Loaded load_segments(const fs::path& p, const Settings& s) {
  Loaded out;
  if (is_json(p)) {
    auto doc = json::parse_detection(read_text(p));
    out.width = doc.width;
    out.height = doc.height;
    for (const auto& t : doc.segments) {
      out.width = std::max<std::size_t>(out.width, std::max(t.segment.p1.col, t.segment.p2.col) + 1);
      out.height =
          std::max<std::size_t>(out.height, std::max(t.segment.p1.row, t.segment.p2.row) + 1);
    }
    out.segments = std::move(doc.segments);
  } else {
    auto r = detect(load_binary(p, s));
    out.width = r.width;
    out.height = r.height;
    out.segments = std::move(r.segments);
  }
  return out;
}

fs::path directory_for(const fs::path& input, const Settings& s) {
  if (s.output.empty()) return input.parent_path();
  fs::create_directories(s.output);
  return s.output;
}

struct DetectTargets {
  std::optional<fs::path> json;
  std::optional<fs::path> svg;
};

DetectTargets targets_for(const fs::path& input, const Settings& s, bool many) {
  const bool want_json = s.format != "svg";
  const bool want_svg = s.format != "json";
  DetectTargets t;
  const bool into_dir = s.output.empty() || many || fs::is_directory(s.output) ||
                        s.output.string().ends_with('/');
  if (into_dir) {
    const auto dir = directory_for(input, s);
    const auto stem = base_stem(input);
    if (want_json) t.json = dir / (stem + ".lines.json");
    if (want_svg) t.svg = dir / (stem + ".lines.svg");
    return t;
  }
  if (want_json) {
    t.json = s.output;
    if (want_svg) t.svg = fs::path(s.output).replace_extension(".svg");
  } else {
    t.svg = s.output;
  }
  return t;
}

void write_detection(const DetectionResult& r, const fs::path& input, const DetectTargets& t) {
  if (t.json) write_text(*t.json, json::detection(r, input.filename().string()));
  if (t.svg) write_text(*t.svg, render_svg(r.width, r.height, r.segments));
}

int cmd_detect(const Settings& s, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const bool many = s.inputs.size() > 1;
  for (const auto& input : s.inputs) {
    try {
      const auto r = detect(load_binary(input, s));
      const auto t = targets_for(input, s, many);
      write_detection(r, input, t);
      out << input.string() << ": " << r.segments.size() << " segments -> "
          << (t.json ? *t.json : *t.svg).string() << '\n';
      logger()->debug("{}: {} skeleton px, {} paths, {} junctions", input.string(),
                      r.stats.skeleton_pixels, r.stats.paths, r.stats.junctions);
    } catch (const Error& e) {
      err << "tgglines: " << input.string() << ": " << e.what() << '\n';
      code = std::max(code, exit_code_for(e));
    }
  }
  return code;
}

int cmd_render(const Settings& s, std::ostream& out) {
  const auto& input = s.inputs.front();
  const auto loaded = load_segments(input, s);
  std::vector<std::uint8_t> png;
  SvgOptions opt;
  if (!s.background.empty()) {
    png = encode_png(load_image(s.background));
    opt.background_png = png;
  }
  const fs::path target =
      s.output.empty() ? input.parent_path() / (base_stem(input) + ".lines.svg") : s.output;
  write_text(target, render_svg(loaded.width, loaded.height, loaded.segments, opt));
  out << input.string() << ": " << loaded.segments.size() << " segments -> " << target.string()
      << '\n';
  return kOk;
}

std::vector<LineSegment> plain(const std::vector<TaggedSegment>& segs) {
  std::vector<LineSegment> out;
  for (const auto& t : segs) out.push_back(t.segment);
  return out;
}

int cmd_eval(const Settings& s, std::ostream& out) {
  validate_config(s.eval);
  const auto& input = s.inputs.front();
  const auto gt = json::parse_ground_truth(read_text(s.gt));
  const auto loaded = load_segments(input, s);
  validate_ground_truth(gt);
  const auto report = evaluate(gt, plain(loaded.segments), s.eval);
  const fs::path target =
      s.output.empty() ? input.parent_path() / (base_stem(input) + ".report.json") : s.output;
  write_text(target, json::report(report));
  out << "accuracy: " << format_percent(report.accuracy) << " (n_c " << json::round3(report.n_c)
      << " / n_t " << report.n_t << ")\n";
  return kOk;
}

struct BatchRow {
  std::string image;
  bool ok = false;
  std::string error;
  std::size_t segments = 0;
  std::optional<MatchReport> report;
};

BatchRow batch_one(const fs::path& input, const fs::path& out_dir, const Settings& s) {
  BatchRow row;
  row.image = input.filename().string();
  try {
    const auto r = detect(load_binary(input, s));
    const auto stem = base_stem(input);
    Settings per = s;
    per.output = out_dir;
    write_detection(r, input, targets_for(input, per, true));
    row.segments = r.segments.size();
    const auto gt_path = input.parent_path() / (stem + ".gt.json");
    if (fs::exists(gt_path)) {
      const auto gt = json::parse_ground_truth(read_text(gt_path));
      row.report = evaluate(gt, r.plain_segments(), s.eval);
      write_text(out_dir / (stem + ".report.json"), json::report(*row.report));
    }
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

int cmd_batch(const Settings& s, std::ostream& out, std::ostream& err) {
  validate_config(s.eval);
  const auto& dir = s.inputs.front();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::io, "not a readable directory: " + dir.string());
  std::vector<fs::path> images;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && is_image(entry.path())) images.push_back(entry.path());
  }
  if (ec) throw Error(ErrorCode::io, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(images.begin(), images.end());

  const fs::path out_dir = s.output.empty() ? dir : s.output;
  fs::create_directories(out_dir);

  std::vector<BatchRow> rows(images.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned jobs = std::min<unsigned>(s.jobs == 0 ? hw : s.jobs,
                                           static_cast<unsigned>(std::max<std::size_t>(1, images.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < images.size(); i = next++) {
      rows[i] = batch_one(images[i], out_dir, s);
      logger()->info("{}: {}", rows[i].image, rows[i].ok ? "ok" : rows[i].error);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  nlohmann::ordered_json summary_rows = nlohmann::ordered_json::array();
  std::size_t failed = 0, evaluated = 0;
  double acc_sum = 0.0;
  char line[256];
  std::snprintf(line, sizeof line, "%-32s %9s %9s\n", "image", "segments", "accuracy");
  out << line;
  for (const auto& r : rows) {
    nlohmann::ordered_json j = {{"image", r.image}, {"status", r.ok ? "ok" : "failed"}};
    if (!r.ok) {
      ++failed;
      j["error"] = r.error;
      std::snprintf(line, sizeof line, "%-32s %9s %9s\n", r.image.c_str(), "failed", "-");
      err << "tgglines: " << r.image << ": " << r.error << '\n';
    } else {
      j["segments"] = r.segments;
      std::string acc = "-";
      if (r.report) {
        ++evaluated;
        acc_sum += r.report->accuracy;
        j["n_t"] = r.report->n_t;
        j["n_c"] = json::round3(r.report->n_c);
        j["accuracy"] = json::round3(r.report->accuracy);
        acc = format_percent(r.report->accuracy);
      } else {
        j["accuracy"] = nullptr;
      }
      std::snprintf(line, sizeof line, "%-32s %9zu %9s\n", r.image.c_str(), r.segments, acc.c_str());
    }
    out << line;
    summary_rows.push_back(std::move(j));
  }
  nlohmann::ordered_json summary = {{"images", std::move(summary_rows)},
                                    {"processed", rows.size()},
                                    {"failed", failed},
                                    {"evaluated", evaluated}};
  if (evaluated > 0) {
    const double mean = acc_sum / static_cast<double>(evaluated);
    summary["mean_accuracy"] = json::round3(mean);
    std::snprintf(line, sizeof line, "mean accuracy over %zu image(s): %.3f\n", evaluated, mean);
    out << line;
  } else {
    summary["mean_accuracy"] = nullptr;
  }
  write_text(out_dir / "summary.json", summary.dump(2) + "\n");
  return failed > 0 ? kPartialBatch : kOk;
}

void add_image_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--threshold", s.threshold, "Luminance threshold; darker pixels are ink")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  cmd->add_flag("--invert", s.invert, "Swap ink and background after thresholding");
}

void add_eval_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--angle-tol", s.eval.angle_tol_deg, "Angle tolerance in degrees")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--dist-tol", s.eval.dist_tol, "Offset tolerance in pixels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--full-threshold", s.eval.full_threshold,
                  "Coverage that counts as fully detected, in (0.5, 1]")
      ->capture_default_str();
  cmd->add_flag("--double-line", s.eval.double_line, "Score each ground-truth line as two rails");
}

void add_format_option(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output: json, svg or both")
      ->check(CLI::IsMember({"json", "svg", "both"}))
      ->capture_default_str();
}

}  // namespace

std::string base_stem(const fs::path& p) {
  std::string stem = p.stem().string();
  for (const std::string_view tail : {".lines", ".gt", ".report"}) {
    if (stem.size() > tail.size() && stem.ends_with(tail)) {
      stem.erase(stem.size() - tail.size());
      break;
    }
  }
  return stem;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Line segment detection for binary diagram images", "tgglines"};
  app.require_subcommand(1);

  auto* detect_cmd = app.add_subcommand("detect", "Detect line segments in images");
  detect_cmd->add_option("images", s.inputs, "Input images (PNG, PBM, PGM)")->required();
  detect_cmd->add_option("-o,--output", s.output,
                         "Output file (one input) or directory; default: next to the input");
  add_image_options(detect_cmd, s);
  add_format_option(detect_cmd, s);

  auto* render_cmd = app.add_subcommand("render", "Draw detected segments as SVG");
  render_cmd->add_option("input", s.inputs, "Detection JSON or image")->required()->expected(1);
  render_cmd->add_option("-o,--output", s.output, "SVG file");
  render_cmd->add_option("--background", s.background, "Image embedded underneath the segments");
  add_image_options(render_cmd, s);

  auto* eval_cmd = app.add_subcommand("eval", "Score a detection against ground truth");
  eval_cmd->add_option("detection", s.inputs, "Detection JSON or image")->required()->expected(1);
  eval_cmd->add_option("--gt", s.gt, "Ground-truth JSON")->required();
  eval_cmd->add_option("-o,--output", s.output, "Report JSON");
  add_image_options(eval_cmd, s);
  add_eval_options(eval_cmd, s);

  auto* batch_cmd = app.add_subcommand("batch", "Detect (and score) every image in a directory");
  batch_cmd->add_option("directory", s.inputs, "Directory of images; <stem>.gt.json is scored")
      ->required()
      ->expected(1);
  batch_cmd->add_option("-o,--output", s.output, "Output directory; default: the input directory");
  batch_cmd->add_option("--jobs", s.jobs, "Images processed in parallel (0 = all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_image_options(batch_cmd, s);
  add_format_option(batch_cmd, s);
  add_eval_options(batch_cmd, s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(detect_cmd)) return cmd_detect(s, out, err);
    if (app.got_subcommand(render_cmd)) return cmd_render(s, out);
    if (app.got_subcommand(eval_cmd)) return cmd_eval(s, out);
    return cmd_batch(s, out, err);
  } catch (const Error& e) {
    err << "tgglines: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const fs::filesystem_error& e) {
    err << "tgglines: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "tgglines: internal error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace tgglines::cli
