#include "tgglines/pipeline.hpp"

#include <array>

#include "tgglines/segmentation.hpp"
#include "tgglines/skeleton_graph.hpp"
#include "tgglines/skeletonize.hpp"

namespace tgglines {

namespace {

class StageClock {
 public:
  StageClock() : last_(std::chrono::steady_clock::now()) {}

  StageTimings::duration lap() {
    const auto now = std::chrono::steady_clock::now();
    const auto d = std::chrono::duration_cast<StageTimings::duration>(now - last_);
    last_ = now;
    return d;
  }

 private:
  std::chrono::steady_clock::time_point last_;
};

constexpr std::array<DetectionKnob, 1> kKnobs{{
    {"douglas_peucker_epsilon", "convex hull area / convex hull perimeter of each path", true},
}};

}  // namespace

std::vector<LineSegment> DetectionResult::plain_segments() const {
  std::vector<LineSegment> out;
  out.reserve(segments.size());
  for (const auto& s : segments) out.push_back(s.segment);
  return out;
}

DetectionResult detect(const BinaryImage& img) {
  DetectionResult result;
  result.width = img.width();
  result.height = img.height();
  auto& st = result.stats;
  StageClock clock;

  const Skeleton skeleton = thin(img);
  st.elapsed.thin = clock.lap();
  const SkeletonGraph graph = build_graph(skeleton);
  st.elapsed.graph = clock.lap();
  const std::vector<NodeId> salient = salient_nodes(graph);
  st.elapsed.salient = clock.lap();
  std::vector<Path> paths = segment_paths(graph, salient);
  st.elapsed.paths = clock.lap();
  const Lscg lscg = build_lscg(graph, std::move(paths), salient);
  st.elapsed.lscg = clock.lap();
  result.lscg = simplify_lscg(lscg);
  st.elapsed.simplify = clock.lap();
  result.segments = segments_of(result.lscg);
  st.elapsed.segments = clock.lap();

  st.skeleton_pixels = graph.node_count();
  st.paths = lscg.paths.size();
  for (const auto& p : lscg.paths) st.closed_paths += p.closed ? 1 : 0;
  for (const auto& n : graph.nodes()) {
    if (n.kind == NodeKind::junction) ++st.junctions;
    if (n.kind == NodeKind::end) ++st.ends;
  }
  st.segments = result.segments.size();
  return result;
}

std::span<const DetectionKnob> detection_knobs() noexcept { return kKnobs; }

}  // namespace tgglines
