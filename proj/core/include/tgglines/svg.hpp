#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "tgglines/simplify.hpp"

namespace tgglines {

struct SvgOptions {
  double stroke_width = 1.0;
  /// PNG bytes drawn underneath the segments; empty for none.
  std::span<const std::uint8_t> background_png;
};

/// One <line> per segment, grouped in a <g> per source path. Line
/// coordinates are the segment's pixel coordinates (x = col, y = row); the
/// enclosing group shifts by half a pixel so lines run through pixel centres
/// of a width x height viewBox.
std::string render_svg(std::size_t width, std::size_t height,
                       std::span<const TaggedSegment> segments, const SvgOptions& options = {});

std::string base64_encode(std::span<const std::uint8_t> bytes);

}  // namespace tgglines
