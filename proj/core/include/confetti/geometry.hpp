#pragma once

#include <algorithm>
#include <cmath>

namespace confetti {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline double dist2(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Closed axis-parallel rectangle [x0,x1] x [y0,y1].
struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool valid() const { return x1 >= x0 && y1 >= y0; }

  bool contains(Vec2 q, double tol = 0.0) const {
    return q.x >= x0 - tol && q.x <= x1 + tol && q.y >= y0 - tol &&
           q.y <= y1 + tol;
  }
  bool contains(const Rect& r, double tol = 0.0) const {
    return r.x0 >= x0 - tol && r.x1 <= x1 + tol && r.y0 >= y0 - tol &&
           r.y1 <= y1 + tol;
  }

  Rect expanded(double m) const { return {x0 - m, y0 - m, x1 + m, y1 + m}; }

  // Nearest point of the rectangle to q.
  Vec2 clamp(Vec2 q) const {
    return {std::clamp(q.x, x0, x1), std::clamp(q.y, y0, y1)};
  }

  // Squared distance from q to the farthest point of the rectangle (a corner).
  double corner_max_dist2(Vec2 q) const {
    const double dx = std::max(std::abs(q.x - x0), std::abs(q.x - x1));
    const double dy = std::max(std::abs(q.y - y0), std::abs(q.y - y1));
    return dx * dx + dy * dy;
  }

  // Per-axis distance from q to the rectangle's projection (0 inside).
  double axis_dist_x(double qx) const {
    return std::max({0.0, x0 - qx, qx - x1});
  }
  double axis_dist_y(double qy) const {
    return std::max({0.0, y0 - qy, qy - y1});
  }
};

}  // namespace confetti
