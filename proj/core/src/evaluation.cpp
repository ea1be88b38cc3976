#include "tgglines/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "tgglines/error.hpp"

namespace tgglines {

namespace {

struct Interval {
  double lo;
  double hi;
};

double union_length(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double total = 0.0;
  double cur_lo = 0.0;
  double cur_hi = -std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals) {
    if (iv.lo > cur_hi) {
      if (cur_hi > cur_lo) total += cur_hi - cur_lo;
      cur_lo = iv.lo;
      cur_hi = iv.hi;
    } else {
      cur_hi = std::max(cur_hi, iv.hi);
    }
  }
  if (cur_hi > cur_lo) total += cur_hi - cur_lo;
  return total;
}

struct Contribution {
  std::size_t index;
  Interval span;
};

void check_tolerances(double angle_tol_deg, double dist_tol) {
  if (!(angle_tol_deg > 0.0) || !(dist_tol > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "tolerances must be positive");
  }
}

// Clipped projections of the detected segments that pass the angle and offset gates.
std::vector<Contribution> contributions(const LineSegment& gt,
                                        std::span<const LineSegment> detected,
                                        double angle_tol_deg, double dist_tol) {
  check_tolerances(angle_tol_deg, dist_tol);
  const double len = gt.length();
  if (len == 0.0) throw Error(ErrorCode::invalid_argument, "zero-length ground-truth segment");

  const Point a = to_point(gt.p1);
  const Point b = to_point(gt.p2);
  const double ur = (b.row - a.row) / len;
  const double uc = (b.col - a.col) / len;
  const double cos_tol = std::cos(angle_tol_deg * std::numbers::pi / 180.0);

  std::vector<Contribution> out;
  for (std::size_t i = 0; i < detected.size(); ++i) {
    const auto& d = detected[i];
    const double dlen = d.length();
    if (dlen == 0.0) continue;
    const Point p = to_point(d.p1);
    const Point q = to_point(d.p2);
    const double cos_angle = std::abs(((q.row - p.row) * ur + (q.col - p.col) * uc) / dlen);
    if (cos_angle < cos_tol - 1e-12) continue;
    if (distance_to_line(p, a, b) > dist_tol || distance_to_line(q, a, b) > dist_tol) continue;
    const double tp = (p.row - a.row) * ur + (p.col - a.col) * uc;
    const double tq = (q.row - a.row) * ur + (q.col - a.col) * uc;
    const double lo = std::max(0.0, std::min(tp, tq));
    const double hi = std::min(len, std::max(tp, tq));
    if (hi > lo) out.push_back({i, {lo, hi}});
  }
  return out;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

// Groups contributions into pieces whose segments touch end to end within dist_tol.
std::vector<std::vector<Interval>> connected_pieces(std::span<const Contribution> parts,
                                                    std::span<const LineSegment> detected,
                                                    double dist_tol) {
  std::vector<int> parent(parts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto touching = [&](const LineSegment& s, const LineSegment& t) {
    for (const auto& e : {s.p1, s.p2}) {
      for (const auto& f : {t.p1, t.p2}) {
        if (distance(to_point(e), to_point(f)) <= dist_tol) return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (touching(detected[parts[i].index], detected[parts[j].index])) {
        parent[find_root(parent, static_cast<int>(i))] = find_root(parent, static_cast<int>(j));
      }
    }
  }
  std::vector<std::vector<Interval>> pieces;
  std::vector<int> slot(parts.size(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int root = find_root(parent, static_cast<int>(i));
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(pieces.size());
      pieces.emplace_back();
    }
    pieces[slot[root]].push_back(parts[i].span);
  }
  return pieces;
}

// Smallest number of pieces whose union reaches `target` length. Exhaustive
// up to `limit` pieces when the piece count is small, greedy otherwise.
std::size_t min_pieces_for(const std::vector<std::vector<Interval>>& pieces, double target,
                           std::size_t limit) {
  constexpr std::size_t kExhaustiveMax = 24;
  auto length_of = [&](std::span<const std::size_t> chosen) {
    std::vector<Interval> all;
    for (const auto c : chosen) all.insert(all.end(), pieces[c].begin(), pieces[c].end());
    return union_length(std::move(all));
  };

  if (pieces.size() <= kExhaustiveMax) {
    std::vector<std::size_t> chosen;
    for (std::size_t k = 1; k <= std::min(limit, pieces.size()); ++k) {
      // Enumerate k-combinations in lexicographic order.
      chosen.resize(k);
      std::iota(chosen.begin(), chosen.end(), std::size_t{0});
      for (;;) {
        if (length_of(chosen) >= target) return k;
        std::size_t i = k;
        while (i > 0 && chosen[i - 1] == pieces.size() - k + (i - 1)) --i;
        if (i == 0) break;
        ++chosen[i - 1];
        for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
      }
    }
  }

  std::vector<std::size_t> chosen;
  std::vector<bool> used(pieces.size(), false);
  double have = 0.0;
  while (have < target && chosen.size() < pieces.size()) {
    std::size_t best = pieces.size();
    double best_len = have;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (used[i]) continue;
      chosen.push_back(i);
      const double l = length_of(chosen);
      chosen.pop_back();
      if (l > best_len) {
        best_len = l;
        best = i;
      }
    }
    if (best == pieces.size()) break;
    used[best] = true;
    chosen.push_back(best);
    have = best_len;
  }
  return have >= target ? chosen.size() : std::numeric_limits<std::size_t>::max();
}

GtScore score_against(const LineSegment& gt, std::span<const LineSegment> detected,
                      std::span<const std::size_t> candidates, const EvalConfig& config) {
  std::vector<LineSegment> subset;
  subset.reserve(candidates.size());
  for (const auto i : candidates) subset.push_back(detected[i]);

  const auto parts = contributions(gt, subset, config.angle_tol_deg, config.dist_tol);
  const double len = gt.length();
  std::vector<Interval> spans;
  for (const auto& p : parts) spans.push_back(p.span);
  const double coverage = std::min(1.0, union_length(spans) / len);

  std::size_t fragments = 0;
  if (!parts.empty()) {
    const auto pieces = connected_pieces(parts, subset, config.dist_tol);
    const double tier = coverage >= config.full_threshold ? config.full_threshold : 0.5;
    fragments = coverage >= 0.5 ? min_pieces_for(pieces, tier * len - 1e-9, config.fragment_limit)
                                : pieces.size();
  }

  GtScore out;
  const auto score = score_gt_segment(coverage, fragments, config.double_line, config);
  out.weight = score.weight;
  out.tag = std::string(score.tag);
  out.coverage = coverage;
  for (const auto& p : parts) out.matched.push_back(candidates[p.index]);
  std::sort(out.matched.begin(), out.matched.end());
  return out;
}

}  // namespace

void validate_config(const EvalConfig& config) {
  check_tolerances(config.angle_tol_deg, config.dist_tol);
  if (!(config.full_threshold > 0.5 && config.full_threshold <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "full threshold must be in (0.5, 1]");
  }
}

void validate_ground_truth(const GroundTruth& gt, std::size_t width, std::size_t height) {
  if (gt.segments.empty()) {
    throw Error(ErrorCode::invalid_argument, "ground truth has no segments");
  }
  for (std::size_t i = 0; i < gt.segments.size(); ++i) {
    const auto& s = gt.segments[i];
    if (s.p1 == s.p2) {
      throw Error(ErrorCode::invalid_argument,
                  "ground-truth segment " + std::to_string(i) + " has zero length");
    }
    if (width == 0 || height == 0) continue;
    for (const auto& p : {s.p1, s.p2}) {
      if (p.row < 0 || p.col < 0 || static_cast<std::size_t>(p.row) >= height ||
          static_cast<std::size_t>(p.col) >= width) {
        throw Error(ErrorCode::invalid_argument,
                    "ground-truth segment " + std::to_string(i) + " leaves the image");
      }
    }
  }
}

Coverage match_coverage(const LineSegment& gt, std::span<const LineSegment> detected,
                        double angle_tol_deg, double dist_tol) {
  const auto parts = contributions(gt, detected, angle_tol_deg, dist_tol);
  std::vector<Interval> spans;
  Coverage out;
  for (const auto& p : parts) {
    spans.push_back(p.span);
    out.matched.push_back(p.index);
  }
  out.fraction = std::min(1.0, union_length(std::move(spans)) / gt.length());
  return out;
}

Score score_gt_segment(double coverage, std::size_t fragment_count, bool double_line,
                       const EvalConfig& config) {
  const double unit = double_line ? 0.5 : 1.0;
  const bool fragmented = fragment_count > config.fragment_limit;
  if (coverage >= config.full_threshold) {
    if (fragmented) return {0.5 * unit, "fragmented"};
    return {unit, fragment_count > 1 ? "split" : "full"};
  }
  if (coverage >= 0.5) {
    if (fragmented) return {0.0, "fragmented"};
    return {0.5 * unit, "partial"};
  }
  return {0.0, "miss"};
}

Accuracy accuracy_from_weights(std::span<const double> weights, std::size_t n_t) {
  if (n_t == 0) throw Error(ErrorCode::invalid_argument, "accuracy needs n_t > 0");
  Accuracy out;
  out.n_c = std::accumulate(weights.begin(), weights.end(), 0.0);
  out.accuracy = out.n_c / static_cast<double>(n_t);
  return out;
}

MatchReport evaluate(const GroundTruth& gt, std::span<const LineSegment> detected,
                     const EvalConfig& config) {
  validate_config(config);
  validate_ground_truth(gt);

  MatchReport report;
  report.config = config;
  report.n_t = gt.segments.size();

  for (std::size_t g = 0; g < gt.segments.size(); ++g) {
    const auto& line = gt.segments[g];
    if (!config.double_line) {
      std::vector<std::size_t> all(detected.size());
      std::iota(all.begin(), all.end(), std::size_t{0});
      auto score = score_against(line, detected, all, config);
      score.index = g;
      report.per_gt.push_back(std::move(score));
      continue;
    }
    // Rails: detected segments whose midpoint lies on either side of the gt line.
    std::vector<std::size_t> rails[2];
    const Point a = to_point(line.p1);
    const Point b = to_point(line.p2);
    for (std::size_t i = 0; i < detected.size(); ++i) {
      const Point m{(detected[i].p1.row + detected[i].p2.row) / 2.0,
                    (detected[i].p1.col + detected[i].p2.col) / 2.0};
      rails[cross(a, b, m) >= 0.0 ? 0 : 1].push_back(i);
    }
    for (int rail = 0; rail < 2; ++rail) {
      auto score = score_against(line, detected, rails[rail], config);
      score.index = g;
      score.rail = rail;
      report.per_gt.push_back(std::move(score));
    }
  }

  std::vector<double> weights;
  for (const auto& s : report.per_gt) weights.push_back(s.weight);
  const auto acc = accuracy_from_weights(weights, report.n_t);
  report.n_c = acc.n_c;
  report.accuracy = acc.accuracy;
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> double_line_pairs(
    std::span<const LineSegment> detected, double angle_tol_deg, double dist_tol) {
  check_tolerances(angle_tol_deg, dist_tol);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < detected.size(); ++i) {
    for (std::size_t j = i + 1; j < detected.size(); ++j) {
      std::size_t longer = i;
      std::size_t shorter = j;
      if (detected[j].length() > detected[i].length()) std::swap(longer, shorter);
      const double short_len = detected[shorter].length();
      if (short_len == 0.0) continue;
      const auto parts = contributions(detected[longer], detected.subspan(shorter, 1),
                                       angle_tol_deg, dist_tol);
      if (parts.empty()) continue;
      if (parts.front().span.hi - parts.front().span.lo > 0.5 * short_len) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string format_percent(double accuracy) {
  return std::to_string(std::lround(accuracy * 100.0)) + "%";
}

}  // namespace tgglines
