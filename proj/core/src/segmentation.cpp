#include "tgglines/segmentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tgglines/error.hpp"

namespace tgglines {

namespace {

class EdgeTracker {
 public:
  explicit EdgeTracker(const SkeletonGraph& g) : g_(g), visited_(g.node_count(), 0) {}

  [[nodiscard]] bool visited(NodeId u, NodeId v) const { return (visited_[u] >> slot(u, v)) & 1U; }

  void mark(NodeId u, NodeId v) {
    visited_[u] = static_cast<std::uint8_t>(visited_[u] | (1U << slot(u, v)));
    visited_[v] = static_cast<std::uint8_t>(visited_[v] | (1U << slot(v, u)));
  }

  [[nodiscard]] bool all_visited(NodeId u) const {
    const auto deg = g_.links(u).size();
    return visited_[u] == static_cast<std::uint8_t>((1U << deg) - 1U);
  }

 private:
  [[nodiscard]] unsigned slot(NodeId u, NodeId v) const {
    const auto nbrs = g_.links(u);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    return static_cast<unsigned>(it - nbrs.begin());
  }

  const SkeletonGraph& g_;
  std::vector<std::uint8_t> visited_;  // 8-neighbourhood: at most 8 edges per node
};

// Follows degree-2 nodes from `start` through `first` until a salient node or
// `start` itself is reached. The returned list includes both ends.
std::vector<NodeId> walk(const SkeletonGraph& g, const std::vector<bool>& salient,
                         EdgeTracker& edges, NodeId start, NodeId first) {
  std::vector<NodeId> ids{start};
  NodeId cur = first;
  edges.mark(start, first);
  for (;;) {
    ids.push_back(cur);
    if (salient[cur] || cur == start) break;
    NodeId next = cur;
    for (const NodeId n : g.links(cur)) {
      if (!edges.visited(cur, n)) {
        next = n;
        break;
      }
    }
    if (next == cur) throw std::logic_error("path walk reached a dead end at a degree-2 node");
    edges.mark(cur, next);
    cur = next;
  }
  return ids;
}

Path make_path(const SkeletonGraph& g, PathId id, std::vector<NodeId> ids, bool closed) {
  Path p;
  p.id = id;
  p.closed = closed;
  p.nodes.reserve(ids.size());
  for (const NodeId n : ids) p.nodes.push_back(g.node(n).pixel);
  p.node_ids = std::move(ids);
  return p;
}

// Every end and junction must be listed; extra interior nodes only split paths further.
std::vector<bool> salient_mask(const SkeletonGraph& g, std::span<const NodeId> salient) {
  std::vector<bool> mask(g.node_count(), false);
  for (const NodeId s : salient) {
    if (s >= g.node_count()) {
      throw Error(ErrorCode::invalid_argument, "salient node id out of range");
    }
    mask[s] = true;
  }
  for (const auto& n : g.nodes()) {
    if (is_salient(n.kind) && !mask[n.id]) {
      throw Error(ErrorCode::invalid_argument,
                  "salient list omits node " + std::to_string(n.id));
    }
  }
  return mask;
}

}  // namespace

std::vector<Path> segment_paths(const SkeletonGraph& g, std::span<const NodeId> salient) {
  const std::vector<bool> is_salient = salient_mask(g, salient);

  EdgeTracker edges(g);
  std::vector<Path> paths;
  auto next_id = [&paths] { return static_cast<PathId>(paths.size()); };

  std::vector<NodeId> ordered(salient.begin(), salient.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (const NodeId s : ordered) {
    if (g.links(s).empty()) {
      paths.push_back(make_path(g, next_id(), {s}, false));
      continue;
    }
    for (const NodeId n : g.links(s)) {
      if (edges.visited(s, n)) continue;
      paths.push_back(make_path(g, next_id(), walk(g, is_salient, edges, s, n), false));
    }
  }

  // Whatever is left consists of cycles made only of degree-2 nodes.
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (edges.all_visited(u)) continue;
    auto ids = walk(g, is_salient, edges, u, g.links(u).front());
    ids.pop_back();  // the walk returns to the anchor
    paths.push_back(make_path(g, next_id(), std::move(ids), true));
  }
  return paths;
}

Lscg build_lscg(const SkeletonGraph& g, std::vector<Path> paths,
                std::span<const NodeId> salient) {
  salient_mask(g, salient);
  std::vector<std::vector<PathId>> incident(g.node_count());
  for (const auto& p : paths) {
    if (p.closed || p.node_ids.empty()) continue;
    incident.at(p.node_ids.front()).push_back(p.id);
    if (p.node_ids.back() != p.node_ids.front()) incident.at(p.node_ids.back()).push_back(p.id);
  }

  std::vector<NodeId> ordered(salient.begin(), salient.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

  Lscg lscg;
  for (const NodeId s : ordered) {
    auto& ids = incident.at(s);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        lscg.edges.push_back({ids[i], ids[j], g.node(s).pixel, s});
      }
    }
  }
  lscg.paths = std::move(paths);
  return lscg;
}

}  // namespace tgglines
