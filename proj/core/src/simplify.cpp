#include "tgglines/simplify.hpp"

#include <algorithm>

#include "tgglines/error.hpp"

namespace tgglines {

std::vector<Pixel> convex_hull(std::span<const Pixel> points) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "convex hull of no points");

  std::vector<Pixel> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Andrew's monotone chain; strict turns only so collinear points are dropped.
  std::vector<Pixel> hull(2 * pts.size());
  std::size_t k = 0;
  auto turn = [&](std::size_t i, std::size_t j, Pixel p) {
    return cross(to_point(hull[i]), to_point(hull[j]), to_point(p));
  };
  for (const auto& p : pts) {
    while (k >= 2 && turn(k - 2, k - 1, p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && turn(k - 2, k - 1, *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area(std::span<const Pixel> polygon) {
  if (polygon.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto a = to_point(polygon[i]);
    const auto b = to_point(polygon[(i + 1) % polygon.size()]);
    twice += a.row * b.col - b.row * a.col;
  }
  return std::abs(twice) / 2.0;
}

double polygon_perimeter(std::span<const Pixel> polygon) {
  if (polygon.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    total += distance(to_point(polygon[i]), to_point(polygon[(i + 1) % polygon.size()]));
  }
  return total;
}

double adaptive_epsilon(std::span<const Pixel> points) {
  if (points.size() < 3) {
    throw Error(ErrorCode::invalid_argument, "adaptive epsilon needs at least 3 points");
  }
  const auto hull = convex_hull(points);
  const double area = polygon_area(hull);
  const double perimeter = polygon_perimeter(hull);
  if (area == 0.0 || perimeter == 0.0) return 0.0;
  return area / perimeter;
}

std::vector<std::size_t> douglas_peucker_indices(std::span<const Pixel> points, double epsilon) {
  if (points.size() < 2) {
    throw Error(ErrorCode::invalid_argument, "Douglas-Peucker needs at least 2 points");
  }
  if (epsilon < 0.0) throw Error(ErrorCode::invalid_argument, "negative epsilon");

  std::vector<bool> keep(points.size(), false);
  keep.front() = keep.back() = true;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, points.size() - 1}};
  while (!stack.empty()) {
    const auto [first, last] = stack.back();
    stack.pop_back();
    const auto a = to_point(points[first]);
    const auto b = to_point(points[last]);
    double farthest = -1.0;
    std::size_t split = first;
    for (std::size_t i = first + 1; i < last; ++i) {
      const double d = distance_to_segment(to_point(points[i]), a, b);
      if (d > farthest) {
        farthest = d;
        split = i;
      }
    }
    if (split != first && farthest > epsilon) {
      keep[split] = true;
      stack.emplace_back(first, split);
      stack.emplace_back(split, last);
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

std::vector<Pixel> douglas_peucker(std::span<const Pixel> points, double epsilon) {
  std::vector<Pixel> out;
  for (const auto i : douglas_peucker_indices(points, epsilon)) out.push_back(points[i]);
  return out;
}

std::vector<Pixel> simplification_input(const Path& path) {
  std::vector<Pixel> seq = path.nodes;
  if (path.closed && !seq.empty()) seq.push_back(seq.front());
  return seq;
}

SimplifiedPath simplify_path(const Path& path) {
  SimplifiedPath out;
  out.source_path_id = path.id;
  out.closed = path.closed;
  auto seq = simplification_input(path);
  if (path.nodes.size() > 2) {
    out.epsilon_used = adaptive_epsilon(path.nodes);
    out.vertices = douglas_peucker(seq, out.epsilon_used);
  } else {
    out.vertices = std::move(seq);
  }
  return out;
}

SimplifiedLscg simplify_lscg(const Lscg& lscg) {
  SimplifiedLscg out;
  out.paths.reserve(lscg.paths.size());
  for (const auto& p : lscg.paths) out.paths.push_back(simplify_path(p));
  out.edges = lscg.edges;
  return out;
}

std::vector<TaggedSegment> segments_of(const SimplifiedLscg& simplified) {
  std::vector<TaggedSegment> out;
  for (const auto& p : simplified.paths) {
    std::size_t index = 0;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      if (p.vertices[i] == p.vertices[i + 1]) continue;
      out.push_back({p.source_path_id, index++, {p.vertices[i], p.vertices[i + 1]}});
    }
  }
  return out;
}

}  // namespace tgglines
