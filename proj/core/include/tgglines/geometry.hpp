#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace tgglines {

/// Integer pixel coordinate. Row grows downward, column grows rightward.
struct Pixel {
  std::int32_t row = 0;
  std::int32_t col = 0;

  friend constexpr auto operator<=>(const Pixel&, const Pixel&) = default;
};

/// True when a and b are distinct and touch horizontally, vertically or diagonally.
constexpr bool are_8_neighbors(Pixel a, Pixel b) noexcept {
  const auto dr = a.row - b.row;
  const auto dc = a.col - b.col;
  return (dr != 0 || dc != 0) && dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1;
}

struct LineSegment {
  Pixel p1;
  Pixel p2;

  [[nodiscard]] double length() const noexcept {
    return std::hypot(static_cast<double>(p2.row - p1.row), static_cast<double>(p2.col - p1.col));
  }

  friend constexpr bool operator==(const LineSegment&, const LineSegment&) = default;
};

/// Real-valued point in the same (row, col) frame as Pixel.
struct Point {
  double row = 0.0;
  double col = 0.0;
};

constexpr Point to_point(Pixel p) noexcept {
  return {static_cast<double>(p.row), static_cast<double>(p.col)};
}

/// z-component of (b - a) x (c - a), treating (row, col) as (x, y).
constexpr double cross(Point a, Point b, Point c) noexcept {
  return (b.row - a.row) * (c.col - a.col) - (b.col - a.col) * (c.row - a.row);
}

inline double distance(Point a, Point b) noexcept {
  return std::hypot(b.row - a.row, b.col - a.col);
}

/// Distance from p to the infinite line through a and b; falls back to |p - a| when a == b.
inline double distance_to_line(Point p, Point a, Point b) noexcept {
  const double len = distance(a, b);
  if (len == 0.0) return distance(p, a);
  return std::abs(cross(a, b, p)) / len;
}

/// Distance from p to the closed segment [a, b]; |p - a| when a == b.
inline double distance_to_segment(Point p, Point a, Point b) noexcept {
  const double vr = b.row - a.row;
  const double vc = b.col - a.col;
  const double len2 = vr * vr + vc * vc;
  if (len2 == 0.0) return distance(p, a);
  const double t = ((p.row - a.row) * vr + (p.col - a.col) * vc) / len2;
  if (t <= 0.0) return distance(p, a);
  if (t >= 1.0) return distance(p, b);
  return distance_to_line(p, a, b);
}

}  // namespace tgglines
