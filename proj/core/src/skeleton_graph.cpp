#include "tgglines/skeleton_graph.hpp"

#include <limits>

namespace tgglines {

namespace {

NodeKind classify(std::uint32_t degree) {
  if (degree <= 1) return NodeKind::end;
  if (degree == 2) return NodeKind::interior;
  return NodeKind::junction;
}

}  // namespace

SkeletonGraph::SkeletonGraph(std::size_t width, std::size_t height, std::vector<PixelNode> nodes,
                             std::vector<std::vector<NodeId>> adjacency,
                             std::vector<std::vector<NodeId>> links)
    : width_(width),
      height_(height),
      nodes_(std::move(nodes)),
      adjacency_(std::move(adjacency)),
      links_(std::move(links)) {
  for (const auto& list : adjacency_) pair_count_ += list.size();
  pair_count_ /= 2;
  for (const auto& list : links_) edge_count_ += list.size();
  edge_count_ /= 2;
}

SkeletonGraph build_graph(const Skeleton& s) {
  constexpr NodeId kNone = std::numeric_limits<NodeId>::max();
  const std::size_t w = s.width();
  const std::size_t h = s.height();

  std::vector<NodeId> id_of(w * h, kNone);
  std::vector<PixelNode> nodes;
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      if (!s.at(r, c)) continue;
      const auto id = static_cast<NodeId>(nodes.size());
      id_of[r * w + c] = id;
      nodes.push_back({id, {static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)}, 0,
                       NodeKind::end});
    }
  }

  // Scanning offsets in row-major order keeps every adjacency list sorted.
  static constexpr int kOrderedRow[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
  static constexpr int kOrderedCol[8] = {-1, 0, 1, -1, 1, -1, 0, 1};

  auto is_on = [&](Pixel p) {
    return p.row >= 0 && p.col >= 0 && static_cast<std::size_t>(p.row) < h &&
           static_cast<std::size_t>(p.col) < w && s.at(static_cast<std::size_t>(p.row),
                                                       static_cast<std::size_t>(p.col));
  };

  std::vector<std::vector<NodeId>> adjacency(nodes.size());
  std::vector<std::vector<NodeId>> links(nodes.size());
  for (auto& node : nodes) {
    auto& list = adjacency[node.id];
    auto& linked = links[node.id];
    for (int k = 0; k < 8; ++k) {
      const std::int64_t r = node.pixel.row + kOrderedRow[k];
      const std::int64_t c = node.pixel.col + kOrderedCol[k];
      if (r < 0 || c < 0 || r >= static_cast<std::int64_t>(h) ||
          c >= static_cast<std::int64_t>(w)) {
        continue;
      }
      const NodeId other = id_of[static_cast<std::size_t>(r) * w + static_cast<std::size_t>(c)];
      if (other == kNone) continue;
      list.push_back(other);
      const Pixel q{static_cast<std::int32_t>(r), static_cast<std::int32_t>(c)};
      if (m_adjacent(node.pixel, q, is_on)) linked.push_back(other);
    }
    node.degree = static_cast<std::uint32_t>(linked.size());
    node.kind = classify(node.degree);
  }
  return SkeletonGraph(w, h, std::move(nodes), std::move(adjacency), std::move(links));
}

std::vector<NodeId> salient_nodes(const SkeletonGraph& g) {
  std::vector<NodeId> out;
  for (const auto& node : g.nodes()) {
    if (is_salient(node.kind)) out.push_back(node.id);
  }
  return out;
}

}  // namespace tgglines
