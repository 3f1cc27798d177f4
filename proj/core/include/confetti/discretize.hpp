#pragma once

#include <cstdint>
#include <vector>

#include "confetti/crossing.hpp"
#include "confetti/geometry.hpp"
#include "confetti/model.hpp"

namespace confetti {

// Robust (perturbation-stable) colour of a point: RobustBlack means every
// level-k perturbation colours it black, symmetrically for RobustWhite;
// Mixed means the adversary can go either way (or coverage is not even
// guaranteed).
enum class RobustColor : std::uint8_t { Mixed = 0, RobustBlack = 1, RobustWhite = 2 };

// Dissection of the box [-k,k]^2 x [-k,0] into half-open cubes of side 2^-k
// ([a, a+2^-k) per axis, so every leaf lands in exactly one cube), plus a
// single outside cell for everything else. Stores which cubes hold a black
// and/or a white leaf at threshold p; that occupancy is all a level-k
// perturbation preserves.
//
// The robust colour at q is decided by an adversarial-cube comparison over
// z-slab indices (slab iz spans [-k + iz*2^-k, -k + (iz+1)*2^-k)):
// q is RobustBlack iff some black-occupied cube whose footprint always
// covers q sits in a strictly higher slab than every white-capable cube
// whose footprint can cover q. The outside cell, when it holds white,
// participates as pseudo-slab -1: its in-footprint z-range is open above at
// -k, so any in-box cube dominates it, but with no black guarantee at all it
// keeps q from being RobustBlack. Points within one shape diameter of the
// box complement answer Mixed outright (the outside cell could cover them
// near z = 0).
class CubeGrid {
 public:
  CubeGrid(const Configuration& config, double p, int k);

  int k() const { return k_; }
  double cube_side() const { return delta_; }
  double p() const { return p_; }
  const ConfettiShape& shape() const { return shape_; }
  bool outside_has_black() const { return outside_black_; }
  bool outside_has_white() const { return outside_white_; }

  // Total number of cubes in the dissection: (2k 2^k)^2 * (k 2^k) = 4k^3 8^k.
  static long long cube_count(int k);

  struct Entry {
    std::int32_t ix, iy, iz;
    std::uint8_t bits;  // bit 0: holds a black leaf, bit 1: holds a white leaf
  };
  const std::vector<Entry>& entries() const { return entries_; }

  RobustColor robust_color_at(Vec2 q) const;

  // A random configuration hitting exactly the same cubes with the same
  // colours (counts resampled as conditioned-positive Poisson, positions
  // uniform within each cube, outside region repopulated consistently).
  Configuration sample_k_perturbation(std::uint64_t seed) const;

 private:
  Rect cube_footprint(const Entry& e) const;
  int bucket_x(double x) const;
  int bucket_y(double y) const;

  int k_;
  double delta_;
  double p_;
  ConfettiShape shape_;
  Rect window_;
  Rect region_;
  double lambda_total_;
  double depth_;
  std::uint64_t source_seed_;
  bool outside_black_ = false;
  bool outside_white_ = false;

  std::vector<Entry> entries_;  // canonical (iz, iy, ix) order
  double bcell_;
  int nbx_, nby_;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

// Flattened occupancy bits of the dissection: for cube index i (ix fastest,
// then iy, then iz), bit i is 1 iff the cube holds a black leaf and bit
// i + cube_count is 1 iff it holds NO white leaf. Dense; size() is
// 2 * cube_count(k), so the memory cap defaults to k <= 7.
struct OccupancyVector {
  int k = 0;
  long long cubes = 0;
  std::vector<std::uint64_t> bits;

  long long size() const { return 2 * cubes; }
  bool x(long long i) const {
    return (bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }
  bool operator==(const OccupancyVector& other) const = default;
};

OccupancyVector occupancy(const Configuration& config, double p, int k,
                          int max_k = 7);

// Raster of robust colours over a rectangle (cell centers, like ColorGrid).
struct RobustGrid {
  Vec2 origin;
  double pitch = 0.0;
  int ncols = 0, nrows = 0;
  std::vector<RobustColor> cells;

  RobustColor at(int i, int j) const {
    return cells[static_cast<std::size_t>(j) * ncols + i];
  }
};

RobustGrid robust_raster(const CubeGrid& grid, const Rect& rect, double pitch);

// Binary view for crossing queries: cells of the stated colour are those
// robustly that colour; everything else (Mixed included) is the opponent.
ColorGrid to_color_grid(const RobustGrid& robust, Color color);

// Crossing of rect by robustly-coloured cells (Black 8- / White
// 4-connectivity). True implies every level-k perturbation has the
// corresponding continuum crossing. rect must lie inside [-k,k]^2; within
// one diameter of the box edge answers are Mixed, so keep rect away from it
// for informative results. pitch <= 0 selects the default 2^-k.
bool robust_crossing(const CubeGrid& grid, const Rect& rect,
                     Direction direction, Color color, double pitch = 0.0);

}  // namespace confetti
