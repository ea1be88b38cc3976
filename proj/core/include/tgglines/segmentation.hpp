#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tgglines/geometry.hpp"
#include "tgglines/skeleton_graph.hpp"

namespace tgglines {

using PathId = std::uint32_t;

/// Ordered run of skeleton pixels between two salient nodes.
///
/// Open paths start and end at salient nodes and only pass through degree-2
/// nodes; a loop hanging off a junction is an open path whose first and last
/// node coincide. A closed path is a whole component without salient nodes:
/// its nodes list the ring once, starting at a synthetic anchor (the
/// component's minimum-id node), and the edge back to the anchor is implied.
struct Path {
  PathId id = 0;
  std::vector<Pixel> nodes;
  std::vector<NodeId> node_ids;
  bool closed = false;

  /// Skeleton edges covered by this path.
  [[nodiscard]] std::size_t edge_count() const noexcept {
    if (nodes.empty()) return 0;
    return closed ? nodes.size() : nodes.size() - 1;
  }
};

/// Edge of the line segment connectivity graph: two paths sharing a salient pixel.
struct LscgEdge {
  PathId a = 0;
  PathId b = 0;
  Pixel via;
  NodeId via_node = 0;

  friend bool operator==(const LscgEdge&, const LscgEdge&) = default;
};

/// Line segment connectivity graph: one node per path, indexed by path id.
struct Lscg {
  std::vector<Path> paths;
  std::vector<LscgEdge> edges;

  [[nodiscard]] const Path& path(PathId id) const { return paths.at(id); }
};

/// Cuts the graph at the given salient nodes. Walks start from salient nodes
/// in ascending id and follow each unvisited incident edge, lowest neighbour
/// id first; leftover salient-free cycles become closed paths. Isolated
/// pixels become single-node paths. Throws Error(invalid_argument) when
/// salient omits an end or junction node or names an unknown id.
std::vector<Path> segment_paths(const SkeletonGraph& g, std::span<const NodeId> salient);

/// One edge per unordered pair of distinct paths meeting at a salient node,
/// ordered by salient node id, then by path ids. Same argument checks as
/// segment_paths.
Lscg build_lscg(const SkeletonGraph& g, std::vector<Path> paths,
                std::span<const NodeId> salient);

}  // namespace tgglines
