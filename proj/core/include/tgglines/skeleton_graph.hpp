#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tgglines/geometry.hpp"
#include "tgglines/skeletonize.hpp"

namespace tgglines {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t {
  end,       // degree 0 or 1
  interior,  // degree 2
  junction,  // degree > 2
};

struct PixelNode {
  NodeId id = 0;
  Pixel pixel;
  std::uint32_t degree = 0;  // number of links
  NodeKind kind = NodeKind::end;
};

/// Embedded graph with one node per skeleton pixel. Node ids follow row-major
/// pixel order.
///
/// neighbors() holds every 8-neighbouring skeleton pixel. links() is the
/// m-adjacent subset: a diagonal neighbour is dropped when the two pixels
/// already share a 4-neighbour in the skeleton. Links connect exactly the
/// same components, but a staircase or a crossing no longer forms a triangle,
/// so degree and kind come from links and paths are traced along them.
class SkeletonGraph {
 public:
  SkeletonGraph() = default;
  SkeletonGraph(std::size_t width, std::size_t height, std::vector<PixelNode> nodes,
                std::vector<std::vector<NodeId>> adjacency,
                std::vector<std::vector<NodeId>> links);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t height() const noexcept { return height_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
  /// Number of links.
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  /// Number of 8-neighbour pairs.
  [[nodiscard]] std::size_t neighbor_pair_count() const noexcept { return pair_count_; }

  [[nodiscard]] const std::vector<PixelNode>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const PixelNode& node(NodeId id) const { return nodes_.at(id); }
  /// Sorted ascending by id.
  [[nodiscard]] std::span<const NodeId> neighbors(NodeId id) const { return adjacency_.at(id); }
  /// Sorted ascending by id.
  [[nodiscard]] std::span<const NodeId> links(NodeId id) const { return links_.at(id); }

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<PixelNode> nodes_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<NodeId>> links_;
  std::size_t edge_count_ = 0;
  std::size_t pair_count_ = 0;
};

/// True when a and b are m-adjacent in the foreground given by is_on:
/// 4-neighbours, or diagonal neighbours with no shared foreground 4-neighbour.
template <typename IsOn>
bool m_adjacent(Pixel a, Pixel b, IsOn&& is_on) {
  if (!are_8_neighbors(a, b)) return false;
  if (a.row == b.row || a.col == b.col) return true;
  return !is_on(Pixel{a.row, b.col}) && !is_on(Pixel{b.row, a.col});
}

SkeletonGraph build_graph(const Skeleton& s);

/// End and junction node ids, ascending.
std::vector<NodeId> salient_nodes(const SkeletonGraph& g);

constexpr bool is_salient(NodeKind kind) noexcept { return kind != NodeKind::interior; }

}  // namespace tgglines
