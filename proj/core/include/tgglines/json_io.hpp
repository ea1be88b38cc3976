#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgglines/evaluation.hpp"
#include "tgglines/pipeline.hpp"
#include "tgglines/segmentation.hpp"
#include "tgglines/simplify.hpp"
#include "tgglines/skeleton_graph.hpp"

// JSON documents exchanged with the CLI and the annotation tool. Key order is
// fixed and every real number is rounded to 3 decimals, so identical inputs
// serialize to identical bytes. Parse errors throw Error(schema) naming the
// offending field.
namespace tgglines::json {

/// {"width", "height", "nodes": [[id, row, col, degree], ...], "edges": [[u, v], ...]}
/// with u < v; edges are the graph's links.
std::string skeleton_graph(const SkeletonGraph& g);

/// {"paths": [{"id", "closed", "nodes": [[r, c], ...]}], "edges": [{"a", "b", "via": [r, c]}]}
std::string lscg(const Lscg& lscg);

/// Same as lscg() with "vertices" in place of "nodes" and a per-path "epsilon".
std::string simplified_lscg(const SimplifiedLscg& simplified);

/// {"segments": [{"path", "p1": [r, c], "p2": [r, c]}]}
std::string segments(std::span<const TaggedSegment> segments);

/// Simplified LSCG, segments and structural counts of a detection run in
/// one document, plus the source image name and dimensions.
std::string detection(const DetectionResult& result, std::string_view image_name);

/// Segments of a detection (or any document with a "segments" array of
/// {p1, p2} objects; "path" defaults to 0 when absent).
struct DetectionDocument {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<TaggedSegment> segments;

  [[nodiscard]] std::vector<LineSegment> plain_segments() const;
};
DetectionDocument parse_detection(std::string_view text);

std::string ground_truth(const GroundTruth& gt);
GroundTruth parse_ground_truth(std::string_view text);

/// {"config": {...}, "n_t", "n_c", "accuracy", "per_gt": [{"index", "weight", "matched", "tag", ...}]}
std::string report(const MatchReport& report);

double round3(double value);

}  // namespace tgglines::json
