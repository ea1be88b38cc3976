#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgglines/geometry.hpp"

namespace tgglines {

struct GroundTruth {
  std::string image;
  std::string annotator;
  std::string created;  // ISO-8601
  std::vector<LineSegment> segments;
};

/// Throws Error(invalid_argument) when gt has no segments, a zero-length
/// segment, or (for nonzero width/height) an endpoint outside the image.
void validate_ground_truth(const GroundTruth& gt, std::size_t width = 0, std::size_t height = 0);

struct EvalConfig {
  double angle_tol_deg = 10.0;
  double dist_tol = 3.0;
  double full_threshold = 0.9;
  std::size_t fragment_limit = 4;
  bool double_line = false;
};

/// Throws Error(invalid_argument) for non-positive tolerances or a full
/// threshold outside (0.5, 1].
void validate_config(const EvalConfig& config);

struct Coverage {
  double fraction = 0.0;
  /// Indices into the detected list of every segment that contributed.
  std::vector<std::size_t> matched;
};

/// A detected segment contributes when its direction is within angle_tol of
/// gt, both endpoints lie within dist_tol of the gt line, and its projection
/// onto gt overlaps gt's extent. Coverage is the length of the union of the
/// clipped projections divided by |gt|.
/// Throws Error(invalid_argument) for a zero-length gt or non-positive tolerances.
Coverage match_coverage(const LineSegment& gt, std::span<const LineSegment> detected,
                        double angle_tol_deg, double dist_tol);

struct Score {
  double weight = 0.0;
  std::string_view tag;
};

/// Weight table for one ground-truth line (single-line mode) or one rail of
/// it (double-line mode, where every tier is worth half).
///
/// fragment_count is the number of connected pieces needed to reach the
/// coverage tier; beyond config.fragment_limit the match counts as tiny
/// fragments and drops one tier (full -> 0.5, half -> 0).
Score score_gt_segment(double coverage, std::size_t fragment_count, bool double_line,
                       const EvalConfig& config = {});

struct GtScore {
  std::size_t index = 0;
  int rail = -1;  // 0 or 1 in double-line mode
  double weight = 0.0;
  double coverage = 0.0;
  std::vector<std::size_t> matched;
  std::string tag;
};

struct MatchReport {
  EvalConfig config;
  /// One entry per ground-truth segment; two (one per rail) in double-line mode.
  std::vector<GtScore> per_gt;
  double n_c = 0.0;
  std::size_t n_t = 0;
  double accuracy = 0.0;
};

struct Accuracy {
  double n_c = 0.0;
  double accuracy = 0.0;
};

/// n_c = sum of weights, accuracy = n_c / n_t. Throws Error(invalid_argument) when n_t == 0.
Accuracy accuracy_from_weights(std::span<const double> weights, std::size_t n_t);

MatchReport evaluate(const GroundTruth& gt, std::span<const LineSegment> detected,
                     const EvalConfig& config = {});

/// Pairs (i, j), i < j, of detected segments that look like the two sides of
/// one stroke: the shorter lies within angle_tol and dist_tol of the longer's
/// line and more than half of its length projects onto the longer one.
std::vector<std::pair<std::size_t, std::size_t>> double_line_pairs(
    std::span<const LineSegment> detected, double angle_tol_deg, double dist_tol);

/// Whole-number percentage, e.g. 0.84 -> "84%".
std::string format_percent(double accuracy);

}  // namespace tgglines
