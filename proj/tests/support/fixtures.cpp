#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tgglines::testing {

BinaryImage from_ascii(const std::vector<std::string>& rows) {
  const std::size_t h = rows.size();
  const std::size_t w = h == 0 ? 0 : rows.front().size();
  BinaryImage img(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    if (rows[r].size() != w) throw std::invalid_argument("ragged ascii fixture");
    for (std::size_t c = 0; c < w; ++c) img.set(r, c, rows[r][c] == '#' || rows[r][c] == '1');
  }
  return img;
}

std::vector<std::string> to_ascii(const BinaryImage& img) {
  std::vector<std::string> rows(img.height(), std::string(img.width(), '.'));
  for (std::size_t r = 0; r < img.height(); ++r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      if (img.at(r, c)) rows[r][c] = '#';
    }
  }
  return rows;
}

BinaryImage random_blob_image(std::mt19937& rng, int max_side) {
  std::uniform_int_distribution<int> side(4, max_side);
  const int w = side(rng);
  const int h = side(rng);
  BinaryImage img(static_cast<std::size_t>(w), static_cast<std::size_t>(h));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> blobs(1, 5);

  auto paint = [&](int r, int c) {
    if (r >= 0 && c >= 0 && r < h && c < w) img.set(r, c, true);
  };
  const int n = blobs(rng);
  for (int b = 0; b < n; ++b) {
    const double cr = unit(rng) * h;
    const double cc = unit(rng) * w;
    const double kind = unit(rng);
    if (kind < 0.45) {
      const double radius = 0.8 + unit(rng) * std::min(w, h) / 3.0;
      for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
          if (std::hypot(r - cr, c - cc) <= radius) paint(r, c);
        }
      }
    } else if (kind < 0.85) {
      const double angle = unit(rng) * std::numbers::pi;
      const double len = 3.0 + unit(rng) * std::max(w, h);
      const double half_width = 0.4 + unit(rng) * 2.5;
      const double ur = std::sin(angle);
      const double uc = std::cos(angle);
      for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
          const double t = (r - cr) * ur + (c - cc) * uc;
          const double d = -(r - cr) * uc + (c - cc) * ur;
          if (std::abs(t) <= len / 2 && std::abs(d) <= half_width) paint(r, c);
        }
      }
    } else {
      std::uniform_int_distribution<int> rr(0, h - 1), cc2(0, w - 1);
      for (int k = 0; k < w * h / 10; ++k) paint(rr(rng), cc2(rng));
    }
  }
  return img;
}

BinaryImage random_bits(std::mt19937& rng, std::size_t width, std::size_t height, double density) {
  std::bernoulli_distribution bit(density);
  BinaryImage img(width, height);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) img.set(r, c, bit(rng));
  }
  return img;
}

BinaryImage plus_sign() {
  return from_ascii({
      "..#..",
      "..#..",
      "#####",
      "..#..",
      "..#..",
  });
}

namespace {

// Per-unit-length bumps (+1) and dents (-1) along one side of a stroke.
std::vector<int> ragged_profile(std::mt19937& rng, std::size_t length, double rate,
                                bool allow_dents) {
  std::vector<int> profile(length, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < length;) {
    if (unit(rng) >= rate) {
      ++i;
      continue;
    }
    const int sign = (!allow_dents || unit(rng) < 0.5) ? 1 : -1;
    const std::size_t run = unit(rng) < 0.5 ? 1 : 2;
    for (std::size_t k = 0; k < run && i < length; ++k) profile[i++] = sign;
    ++i;  // at least one undisturbed unit between runs
  }
  return profile;
}

// Offsets stay in {-1, 0, +1} and change by one step at a time.
std::vector<int> zigzag_profile(std::mt19937& rng, std::size_t length) {
  std::vector<int> profile(length, 0);
  std::uniform_int_distribution<std::size_t> run_length(3, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  int offset = 0;
  for (std::size_t i = 0; i < length;) {
    const std::size_t run = run_length(rng);
    for (std::size_t k = 0; k < run && i < length; ++k) profile[i++] = offset;
    if (offset == 0) {
      offset = coin(rng) ? 1 : -1;
    } else {
      offset = 0;
    }
  }
  return profile;
}

// Per-unit-length shift of the stroke centre and widening of each side.
struct Profiles {
  std::vector<int> shift;
  std::vector<int> left;
  std::vector<int> right;
};

Profiles make_profiles(std::mt19937& rng, std::size_t bins, const RenderOptions& opt) {
  Profiles p{std::vector<int>(bins, 0), std::vector<int>(bins, 0), std::vector<int>(bins, 0)};
  if (opt.noise == Noise::zigzag) {
    p.shift = zigzag_profile(rng, bins);
  } else if (opt.noise == Noise::ragged) {
    const bool dents = opt.stroke_width > 1;
    p.left = ragged_profile(rng, bins, opt.ragged_rate, dents);
    p.right = ragged_profile(rng, bins, opt.ragged_rate, dents);
  }
  return p;
}

class Canvas {
 public:
  Canvas(std::size_t w, std::size_t h) : img_(w, h) {}

  void paint(long r, long c) {
    if (r < 0 || c < 0 || r >= static_cast<long>(img_.height()) ||
        c >= static_cast<long>(img_.width())) {
      return;
    }
    img_.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
  }

  BinaryImage take() && { return std::move(img_); }

 private:
  BinaryImage img_;
};

void draw_stroke(Canvas& canvas, const LineSegment& line, const RenderOptions& opt,
                 std::mt19937& rng) {
  const Point a = to_point(line.p1);
  const Point b = to_point(line.p2);
  const double len = distance(a, b);
  const double ur = (b.row - a.row) / len;
  const double uc = (b.col - a.col) / len;
  const double radius = opt.stroke_width / 2.0;
  const auto bins = static_cast<std::size_t>(std::floor(len)) + 1;
  const auto prof = make_profiles(rng, bins, opt);

  const double pad = radius + 3.0;
  const long r0 = static_cast<long>(std::floor(std::min(a.row, b.row) - pad));
  const long r1 = static_cast<long>(std::ceil(std::max(a.row, b.row) + pad));
  const long c0 = static_cast<long>(std::floor(std::min(a.col, b.col) - pad));
  const long c1 = static_cast<long>(std::ceil(std::max(a.col, b.col) + pad));
  constexpr double kSlack = 1e-9;
  for (long r = r0; r <= r1; ++r) {
    for (long c = c0; c <= c1; ++c) {
      const double t = (r - a.row) * ur + (c - a.col) * uc;
      bool inside = false;
      if (t >= 0.0 && t <= len) {
        const auto bin = std::min(bins - 1, static_cast<std::size_t>(std::lround(t)));
        const double d = -(r - a.row) * uc + (c - a.col) * ur - prof.shift[bin];
        inside = d >= 0.0 ? d <= radius + prof.right[bin] + kSlack
                          : -d <= radius + prof.left[bin] + kSlack;
      } else {
        inside = std::min(distance({double(r), double(c)}, a), distance({double(r), double(c)}, b)) <=
                 radius + kSlack;
      }
      if (inside) canvas.paint(r, c);
    }
  }
}

void draw_ring(Canvas& canvas, const Circle& circle, const RenderOptions& opt, std::mt19937& rng) {
  const double radius = opt.stroke_width / 2.0;
  const auto bins = static_cast<std::size_t>(std::ceil(2 * std::numbers::pi * circle.radius)) + 1;
  const auto prof = make_profiles(rng, bins, opt);
  const double pad = circle.radius + radius + 3.0;
  constexpr double kSlack = 1e-9;
  for (long r = static_cast<long>(circle.center.row - pad); r <= circle.center.row + pad; ++r) {
    for (long c = static_cast<long>(circle.center.col - pad); c <= circle.center.col + pad; ++c) {
      const double dr = r - circle.center.row;
      const double dc = c - circle.center.col;
      double theta = std::atan2(dr, dc);
      if (theta < 0) theta += 2 * std::numbers::pi;
      const auto bin = std::min(bins - 1, static_cast<std::size_t>(theta * circle.radius));
      const double d = std::hypot(dr, dc) - circle.radius - prof.shift[bin];
      const bool inside = d >= 0.0 ? d <= radius + prof.right[bin] + kSlack
                                   : -d <= radius + prof.left[bin] + kSlack;
      if (inside) canvas.paint(r, c);
    }
  }
}

LineSegment seg(int r1, int c1, int r2, int c2) { return {{r1, c1}, {r2, c2}}; }

// Endpoint of a ray of the given length and angle (degrees, counterclockwise
// from +col with rows growing downward), rounded to the pixel grid.
Pixel polar(Pixel origin, double length, double degrees) {
  const double rad = degrees * std::numbers::pi / 180.0;
  return {static_cast<std::int32_t>(std::lround(origin.row - length * std::sin(rad))),
          static_cast<std::int32_t>(std::lround(origin.col + length * std::cos(rad)))};
}

}  // namespace

BinaryImage render(const Diagram& diagram, const RenderOptions& options) {
  Canvas canvas(diagram.width, diagram.height);
  std::mt19937 rng(options.seed);
  for (const auto& line : diagram.lines) draw_stroke(canvas, line, options, rng);
  for (const auto& circle : diagram.circles) draw_ring(canvas, circle, options, rng);
  return std::move(canvas).take();
}

Diagram ladder() {
  Diagram d{"ladder", 120, 134, {}, {}};
  for (int i = 0; i < 10; ++i) {
    const int row = 12 + 12 * i;
    d.lines.push_back(seg(row, 15, row, 104));
  }
  return d;
}

std::vector<Diagram> corpus() {
  std::vector<Diagram> out;

  {
    Diagram d{"parallel_bars", 160, 160, {}, {}};
    for (int i = 0; i < 5; ++i) d.lines.push_back(seg(15 + 14 * i, 12, 15 + 14 * i, 70 + 12 * i));
    for (int i = 0; i < 4; ++i) d.lines.push_back(seg(95, 20 + 16 * i, 148, 20 + 16 * i));
    out.push_back(std::move(d));
  }
  {
    Diagram d{"grid_crossings", 160, 160, {}, {}};
    for (int i = 0; i < 3; ++i) {
      d.lines.push_back(seg(40 + 40 * i, 15, 40 + 40 * i, 145));
      d.lines.push_back(seg(15, 40 + 40 * i, 145, 40 + 40 * i));
    }
    out.push_back(std::move(d));
  }
  {
    Diagram d{"t_junctions", 160, 140, {}, {}};
    d.lines.push_back(seg(20, 15, 20, 145));
    for (int i = 0; i < 4; ++i) d.lines.push_back(seg(20, 30 + 33 * i, 80 + 10 * (i % 2), 30 + 33 * i));
    d.lines.push_back(seg(120, 15, 120, 145));
    out.push_back(std::move(d));
  }
  {
    Diagram d{"circle_and_box", 170, 170, {}, {}};
    d.lines = {seg(15, 15, 15, 155), seg(15, 155, 155, 155), seg(155, 155, 155, 15),
               seg(155, 15, 15, 15)};
    d.circles.push_back({{85.0, 85.0}, 40.0});
    out.push_back(std::move(d));
  }
  {
    Diagram d{"circles_and_cross", 180, 160, {}, {}};
    d.circles.push_back({{45.0, 45.0}, 28.0});
    d.circles.push_back({{45.0, 130.0}, 22.0});
    d.lines = {seg(95, 20, 150, 75), seg(95, 75, 150, 20), seg(100, 100, 100, 165),
               seg(140, 100, 140, 165)};
    out.push_back(std::move(d));
  }
  {
    Diagram d{"box_with_diagonal", 160, 160, {}, {}};
    d.lines = {seg(20, 20, 20, 140), seg(20, 140, 140, 140), seg(140, 140, 140, 20),
               seg(140, 20, 20, 20), seg(30, 30, 130, 130)};
    out.push_back(std::move(d));
  }
  {
    Diagram d{"mixed_angles", 200, 200, {}, {}};
    const double angles[] = {0, 30, 45, 60, 90, 120, 135, 150};
    for (int i = 0; i < 8; ++i) {
      const Pixel centre{static_cast<std::int32_t>(45 + 110 * (i / 4)),
                         static_cast<std::int32_t>(28 + 48 * (i % 4))};
      const Pixel a = polar(centre, 20, angles[i]);
      const Pixel b = polar(centre, 20, angles[i] + 180);
      d.lines.push_back({a, b});
    }
    out.push_back(std::move(d));
  }
  {
    Diagram d{"star", 180, 180, {}, {}};
    const Pixel centre{90, 90};
    for (const double angle : {0.0, 45.0, 90.0, 135.0, 180.0, 225.0, 270.0, 315.0}) {
      d.lines.push_back({centre, polar(centre, 70, angle)});
    }
    out.push_back(std::move(d));
  }
  {
    Diagram d{"ladder_rungs", 140, 160, {}, {}};
    d.lines = {seg(15, 30, 145, 30), seg(15, 110, 145, 110)};
    for (int i = 0; i < 5; ++i) d.lines.push_back(seg(30 + 25 * i, 30, 30 + 25 * i, 110));
    out.push_back(std::move(d));
  }
  {
    Diagram d{"polyline", 180, 160, {}, {}};
    d.lines = {seg(20, 15, 20, 80), seg(20, 80, 70, 80), seg(70, 80, 70, 160),
               seg(70, 160, 140, 160), seg(140, 160, 140, 15), seg(100, 20, 100, 120)};
    out.push_back(std::move(d));
  }
  return out;
}

GroundTruth ground_truth_of(const Diagram& diagram) {
  GroundTruth gt;
  gt.image = diagram.name;
  gt.annotator = "synthetic";
  gt.created = "2026-01-01T00:00:00Z";
  gt.segments = diagram.lines;
  return gt;
}

}  // namespace tgglines::testing
