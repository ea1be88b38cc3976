#include "tgglines/svg.hpp"

#include <array>
#include <sstream>

namespace tgglines {

namespace {

// Distinct hues so neighbouring paths are easy to tell apart.
constexpr std::array<const char*, 8> kPalette = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                                 "#911eb4", "#42d4f4", "#f032e6", "#9a6324"};

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const std::uint32_t v = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    for (int s = 18; s >= 0; s -= 6) out.push_back(kAlphabet[(v >> s) & 0x3F]);
  }
  if (const std::size_t rest = bytes.size() - i; rest > 0) {
    const std::uint32_t v = (bytes[i] << 16) | (rest == 2 ? bytes[i + 1] << 8 : 0);
    out.push_back(kAlphabet[(v >> 18) & 0x3F]);
    out.push_back(kAlphabet[(v >> 12) & 0x3F]);
    out.push_back(rest == 2 ? kAlphabet[(v >> 6) & 0x3F] : '=');
    out.push_back('=');
  }
  return out;
}

std::string render_svg(std::size_t width, std::size_t height,
                       std::span<const TaggedSegment> segments, const SvgOptions& options) {
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!options.background_png.empty()) {
    svg << "  <image x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" style=\"image-rendering:pixelated\" href=\"data:image/png;base64,"
        << base64_encode(options.background_png) << "\"/>\n";
  }
  svg << "  <g transform=\"translate(0.5 0.5)\" fill=\"none\" stroke-linecap=\"round\" "
         "stroke-width=\""
      << options.stroke_width << "\">\n";

  bool open = false;
  PathId current = 0;
  for (const auto& s : segments) {
    if (!open || s.path != current) {
      if (open) svg << "    </g>\n";
      current = s.path;
      open = true;
      svg << "    <g class=\"path\" data-path=\"" << current << "\" stroke=\""
          << kPalette[current % kPalette.size()] << "\">\n";
    }
    svg << "      <line x1=\"" << s.segment.p1.col << "\" y1=\"" << s.segment.p1.row
        << "\" x2=\"" << s.segment.p2.col << "\" y2=\"" << s.segment.p2.row << "\"/>\n";
  }
  if (open) svg << "    </g>\n";
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace tgglines
