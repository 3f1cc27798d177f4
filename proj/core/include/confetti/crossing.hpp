#pragma once

#include <cstdint>
#include <vector>

#include "confetti/geometry.hpp"
#include "confetti/model.hpp"

namespace confetti {

enum class Direction { Horizontal, Vertical };

// Raster of colours over a rectangle. Cell (i,j) is the colour at the cell
// center origin + ((i+1/2)h, (j+1/2)h); j = 0 is the bottom row.
class ColorGrid {
 public:
  ColorGrid(Vec2 origin, double pitch, int ncols, int nrows,
            Color fill = Color::White);

  int ncols() const { return ncols_; }
  int nrows() const { return nrows_; }
  double pitch() const { return pitch_; }
  Vec2 origin() const { return origin_; }

  Color at(int i, int j) const {
    return static_cast<Color>(cells_[static_cast<std::size_t>(j) * ncols_ + i]);
  }
  void set(int i, int j, Color c) {
    cells_[static_cast<std::size_t>(j) * ncols_ + i] =
        static_cast<std::uint8_t>(c);
  }
  Vec2 center(int i, int j) const {
    return {origin_.x + (i + 0.5) * pitch_, origin_.y + (j + 0.5) * pitch_};
  }
  std::size_t count(Color c) const;

 private:
  Vec2 origin_;
  double pitch_;
  int ncols_, nrows_;
  std::vector<std::uint8_t> cells_;
};

// Side-to-side crossing by a monochrome path: Black uses 8-connectivity,
// White 4-connectivity, which makes the pixel duality below exact.
// Horizontal means left column to right column, Vertical bottom row to top.
bool has_crossing(const ColorGrid& grid, Direction direction, Color color);

struct CrossingResult {
  bool black_horizontal = false;
  bool black_vertical = false;
  bool white_horizontal = false;
  bool white_vertical = false;
};

// All four crossings. Debug builds assert the pixel duality.
CrossingResult crossing_result(const ColorGrid& grid);

// Exactly one of {Black horizontal, White vertical} and one of
// {Black vertical, White horizontal} holds on every grid.
bool pixel_duality_holds(const CrossingResult& r);
bool pixel_duality_holds(const ColorGrid& grid);

// Raster of top-leaf colour marks over a rectangle: one sample serves every
// threshold p (and every time along an interpolation path), realizing the
// monotone coupling. Built by painting leaves top-down into empty cells,
// deepening the configuration whenever cells remain uncovered.
class MarkGrid {
 public:
  MarkGrid(Vec2 origin, double pitch, int ncols, int nrows);

  int ncols() const { return ncols_; }
  int nrows() const { return nrows_; }
  double pitch() const { return pitch_; }
  Vec2 origin() const { return origin_; }
  double mark(int i, int j) const {
    return marks_[static_cast<std::size_t>(j) * ncols_ + i];
  }
  Vec2 center(int i, int j) const {
    return {origin_.x + (i + 0.5) * pitch_, origin_.y + (j + 0.5) * pitch_};
  }

 private:
  friend MarkGrid rasterize_marks(Configuration& config, const Rect& rect,
                                  double pitch);
  Vec2 origin_;
  double pitch_;
  int ncols_, nrows_;
  std::vector<double> marks_;
};

// Paints the top-cover marks of all cell centers of rect at the given pitch.
// May deepen config (append-only), never alters existing leaves.
MarkGrid rasterize_marks(Configuration& config, const Rect& rect, double pitch);

// Colour grid at threshold p derived from a mark raster (u < p is black).
ColorGrid threshold_grid(const MarkGrid& marks, double p);

// Colour raster of rect: every cell holds color_at of its center.
ColorGrid rasterize(Configuration& config, double p, const Rect& rect,
                    double pitch);

// Black annulus circuit event around q at scale r: vertical crossings of the
// left/right flanks q + [∓3r/2, ∓r/2] x [-3r/2, 3r/2] and horizontal
// crossings of the top/bottom flanks q + [-3r/2, 3r/2] x [±r/2, ±3r/2],
// all four in black.
bool annulus_event(Configuration& config, double p, Vec2 q, double r,
                   double pitch);

}  // namespace confetti
