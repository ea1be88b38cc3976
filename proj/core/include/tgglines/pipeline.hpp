#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tgglines/raster_io.hpp"
#include "tgglines/simplify.hpp"

namespace tgglines {

struct StageTimings {
  using duration = std::chrono::nanoseconds;
  duration thin{};
  duration graph{};
  duration salient{};
  duration paths{};
  duration lscg{};
  duration simplify{};
  duration segments{};

  [[nodiscard]] duration total() const noexcept {
    return thin + graph + salient + paths + lscg + simplify + segments;
  }
};

struct DetectionStats {
  std::size_t skeleton_pixels = 0;
  std::size_t paths = 0;
  std::size_t closed_paths = 0;
  std::size_t junctions = 0;
  std::size_t ends = 0;
  std::size_t segments = 0;
  StageTimings elapsed;
};

struct DetectionResult {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<TaggedSegment> segments;
  SimplifiedLscg lscg;
  DetectionStats stats;

  [[nodiscard]] std::vector<LineSegment> plain_segments() const;
};

/// Skeleton-graph-guided line segment detection:
/// thin -> build_graph -> salient_nodes -> segment_paths -> build_lscg
/// -> simplify_lscg -> segments_of. Deterministic; the image is the only input.
DetectionResult detect(const BinaryImage& img);

/// A tunable quantity on the detection path.
struct DetectionKnob {
  std::string_view name;
  std::string_view rule;
  bool adaptive;
};

/// Every quantity that can influence detect()'s segments.
std::span<const DetectionKnob> detection_knobs() noexcept;

}  // namespace tgglines
