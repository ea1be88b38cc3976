#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tgglines/evaluation.hpp"
#include "tgglines/geometry.hpp"
#include "tgglines/raster_io.hpp"

namespace tgglines::testing {

/// '#' or '1' is foreground, anything else background. All rows must have equal length.
BinaryImage from_ascii(const std::vector<std::string>& rows);
std::vector<std::string> to_ascii(const BinaryImage& img);

/// Random image up to max_side x max_side made of a few overlapping blobs
/// (discs, bars and speckle), some touching the border.
BinaryImage random_blob_image(std::mt19937& rng, int max_side = 32);

/// Uniformly random bits, for exhaustive-style graph checks.
BinaryImage random_bits(std::mt19937& rng, std::size_t width, std::size_t height, double density);

/// 5x5 plus sign: row 2 and column 2 set.
BinaryImage plus_sign();

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Synthetic line drawing with its ground truth known by construction.
struct Diagram {
  std::string name;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<LineSegment> lines;  // ground truth
  std::vector<Circle> circles;     // drawn, not part of the ground truth
};

enum class Noise {
  none,
  /// The whole stroke steps sideways between offsets -1, 0 and +1 px in runs
  /// of 3-8 px along its length.
  zigzag,
  /// Each side of the stroke independently gets 1-2 px bumps and dents.
  ragged,
};

struct RenderOptions {
  int stroke_width = 3;
  Noise noise = Noise::none;
  /// Ragged only: probability per unit length that a side starts a bump.
  double ragged_rate = 0.15;
  std::uint32_t seed = 1;
};

/// Rasterizes every line as a round-capped stroke and every circle as a ring
/// of the given width.
BinaryImage render(const Diagram& diagram, const RenderOptions& options);

/// Ten parallel horizontal bars.
Diagram ladder();

/// The ten-diagram synthetic corpus: parallel bars, crossings, T-junctions,
/// circles, boxes and mixed angles.
std::vector<Diagram> corpus();

GroundTruth ground_truth_of(const Diagram& diagram);

}  // namespace tgglines::testing
