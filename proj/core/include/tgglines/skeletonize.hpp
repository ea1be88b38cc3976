#pragma once

#include <cstddef>
#include <vector>

#include "tgglines/geometry.hpp"
#include "tgglines/raster_io.hpp"

namespace tgglines {

/// One-pixel-wide central line of a binary image. Always a subset of the
/// image it was thinned from.
class Skeleton {
 public:
  explicit Skeleton(BinaryImage bits) : bits_(std::move(bits)) {}

  [[nodiscard]] std::size_t width() const noexcept { return bits_.width(); }
  [[nodiscard]] std::size_t height() const noexcept { return bits_.height(); }
  [[nodiscard]] bool at(std::size_t row, std::size_t col) const noexcept {
    return bits_.at(row, col);
  }
  [[nodiscard]] const BinaryImage& bits() const noexcept { return bits_; }

  friend bool operator==(const Skeleton&, const Skeleton&) = default;

 private:
  BinaryImage bits_;
};

/// Zhang-Suen thinning to a fixed point.
///
/// Each sub-pass selects its deletion candidates from a snapshot of the image
/// with the classic conditions (2 <= B <= 6, A = 1 and the two directional
/// products). Candidates are then committed in raster order, skipping any
/// candidate that is no longer a simple pixel given the deletions already
/// made; this keeps 2-pixel-thick strokes and 2x2 blocks from vanishing.
/// Staircase corners are left in place; the skeleton graph resolves them.
///
/// Pixels outside the grid are background. Throws Error(no_convergence) if
/// more than width * height passes are needed.
Skeleton thin(const BinaryImage& img);

/// Skeleton pixels in row-major order.
std::vector<Pixel> foreground_pixels(const Skeleton& s);

namespace neighborhood {

/// Bit i of the mask is neighbour P(i+2) in Zhang-Suen numbering:
/// P2 = N, P3 = NE, P4 = E, P5 = SE, P6 = S, P7 = SW, P8 = W, P9 = NW.
inline constexpr int kRowOffset[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
inline constexpr int kColOffset[8] = {0, 1, 1, 1, 0, -1, -1, -1};

/// B(p): number of foreground neighbours.
int foreground_count(unsigned mask) noexcept;
/// A(p): number of 0 -> 1 transitions in the cyclic sequence P2..P9, P2.
int transitions(unsigned mask) noexcept;
/// True when deleting the centre pixel preserves 8-connected foreground and
/// 4-connected background topology.
bool is_simple(unsigned mask) noexcept;

}  // namespace neighborhood

}  // namespace tgglines
