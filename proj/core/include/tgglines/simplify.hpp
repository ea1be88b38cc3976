#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tgglines/geometry.hpp"
#include "tgglines/segmentation.hpp"

namespace tgglines {

/// Convex hull in counterclockwise order, treating (row, col) as (x, y) and
/// starting from the lexicographically smallest point. Duplicates and
/// collinear boundary points are dropped, so collinear input yields its two
/// extremes and a single distinct point yields itself.
/// Throws Error(invalid_argument) on empty input.
std::vector<Pixel> convex_hull(std::span<const Pixel> points);

/// Shoelace area of a simple polygon given in order.
double polygon_area(std::span<const Pixel> polygon);
/// Closed perimeter; a 2-vertex polygon counts its edge twice.
double polygon_perimeter(std::span<const Pixel> polygon);

/// Douglas-Peucker tolerance for a path: hull area / hull perimeter.
/// Returns 0 for a degenerate hull. Throws Error(invalid_argument) for fewer
/// than 3 points.
double adaptive_epsilon(std::span<const Pixel> points);

/// Indices of the points retained by Douglas-Peucker with the given
/// tolerance. Distances are measured to the chord segment, which equals the
/// perpendicular distance whenever the point projects inside the chord; a
/// point that doubles back past an end is measured to that end, so every
/// dropped point stays within epsilon of the result. A point is kept when
/// its distance exceeds epsilon; ties for the farthest point go to the
/// lower index. Throws Error(invalid_argument) for fewer than 2 points or a
/// negative epsilon.
std::vector<std::size_t> douglas_peucker_indices(std::span<const Pixel> points, double epsilon);

std::vector<Pixel> douglas_peucker(std::span<const Pixel> points, double epsilon);

struct SimplifiedPath {
  PathId source_path_id = 0;
  /// For closed paths the last vertex repeats the anchor.
  std::vector<Pixel> vertices;
  double epsilon_used = 0.0;
  bool closed = false;
};

/// LSCG whose paths have been replaced by their simplified geometry.
/// paths[i] corresponds to source.paths[i]; edges are those of the source.
struct SimplifiedLscg {
  std::vector<SimplifiedPath> paths;
  std::vector<LscgEdge> edges;
};

/// Point sequence that Douglas-Peucker sees for a path: the nodes, plus the
/// anchor appended again for closed paths.
std::vector<Pixel> simplification_input(const Path& path);

/// Paths with more than two nodes are simplified with their own adaptive
/// epsilon; shorter paths pass through unchanged.
SimplifiedPath simplify_path(const Path& path);

SimplifiedLscg simplify_lscg(const Lscg& lscg);

struct TaggedSegment {
  PathId path = 0;
  std::size_t index = 0;  // position along the simplified path
  LineSegment segment;
};

/// Consecutive vertex pairs of every simplified path, in path order;
/// zero-length pairs are skipped.
std::vector<TaggedSegment> segments_of(const SimplifiedLscg& simplified);

}  // namespace tgglines
