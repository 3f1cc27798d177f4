#pragma once

#include <string>

#include "confetti/geometry.hpp"

namespace confetti {

// Boundary comparisons use this tolerance, ties breaking toward "covers".
inline constexpr double kCoverTol = 1e-12;

enum class ShapeKind { UnitDisk, Square };

// Leaf footprint: closed unit disk, or axis-parallel closed square of given
// halfwidth. Both are convex and invariant under quarter-turn rotations and
// reflections; cube_always_covers relies on convexity (the farthest point of
// a rectangle from q is then a corner).
class ConfettiShape {
 public:
  static ConfettiShape unit_disk() { return ConfettiShape(ShapeKind::UnitDisk, 1.0); }
  static ConfettiShape square(double halfwidth);
  // Parses "disk" or "square:<halfwidth>".
  static ConfettiShape parse(const std::string& text);

  ShapeKind kind() const { return kind_; }
  double halfwidth() const { return halfwidth_; }

  // Footprint diameter: 2 for the disk, full diagonal 2*hw*sqrt(2) for the
  // square. Used as sampling margin and spatial-hash cell size.
  double diameter() const;

  // Largest per-axis offset |q - center| at which the shape can still cover
  // q: 1 for the disk, hw for the square. Bounds candidate searches.
  double axis_reach() const {
    return kind_ == ShapeKind::UnitDisk ? 1.0 : halfwidth_;
  }

  // q lies in center + A (closed).
  bool covers(Vec2 center, Vec2 q) const {
    if (kind_ == ShapeKind::UnitDisk) {
      constexpr double r2 = (1.0 + kCoverTol) * (1.0 + kCoverTol);
      return dist2(center, q) <= r2;
    }
    const double w = halfwidth_ + kCoverTol;
    return std::abs(q.x - center.x) <= w && std::abs(q.y - center.y) <= w;
  }

  // Some center in the footprint rectangle covers q.
  bool cube_can_cover(const Rect& footprint, Vec2 q) const {
    if (kind_ == ShapeKind::UnitDisk) {
      constexpr double r2 = (1.0 + kCoverTol) * (1.0 + kCoverTol);
      return dist2(footprint.clamp(q), q) <= r2;
    }
    const double w = halfwidth_ + kCoverTol;
    return footprint.axis_dist_x(q.x) <= w && footprint.axis_dist_y(q.y) <= w;
  }

  // Every center in the footprint rectangle covers q. Degenerate footprints
  // (side 0) reduce to covers().
  bool cube_always_covers(const Rect& footprint, Vec2 q) const {
    if (kind_ == ShapeKind::UnitDisk) {
      constexpr double r2 = (1.0 + kCoverTol) * (1.0 + kCoverTol);
      return footprint.corner_max_dist2(q) <= r2;
    }
    const double w = halfwidth_ + kCoverTol;
    const double fx = std::max(std::abs(q.x - footprint.x0), std::abs(q.x - footprint.x1));
    const double fy = std::max(std::abs(q.y - footprint.y0), std::abs(q.y - footprint.y1));
    return fx <= w && fy <= w;
  }

  std::string describe() const;

 private:
  ConfettiShape(ShapeKind kind, double halfwidth)
      : kind_(kind), halfwidth_(halfwidth) {}

  ShapeKind kind_;
  double halfwidth_;
};

}  // namespace confetti
