#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "confetti/errors.hpp"
#include "confetti/geometry.hpp"
#include "confetti/rng.hpp"
#include "confetti/shape.hpp"

namespace confetti {

enum class Color : std::uint8_t { White = 0, Black = 1 };

// Intensity pair (lambda_black, lambda_white). The black fraction
// p = lambda_black / (lambda_black + lambda_white) is the single knob the
// monotone coupling sweeps: a leaf with mark u is black iff u < p.
struct ColorParams {
  ColorParams(double lambda_black, double lambda_white);
  static ColorParams from_p(double lambda_total, double p);

  double lambda_black;
  double lambda_white;

  double lambda_total() const { return lambda_black + lambda_white; }
  double p() const { return lambda_black / lambda_total(); }
};

// Interpolation from the balanced point (1,1) to (2p,2-2p) at constant total
// intensity 2: lambda_black(t) = 1 + t(2p-1), lambda_white(t) = 1 - t(2p-1).
class InterpolationPath {
 public:
  explicit InterpolationPath(double p_target);

  double p_target() const { return p_target_; }
  double lambda_black(double t) const;
  double lambda_white(double t) const;
  // Colour threshold at time t: lambda_black(t) / 2.
  double threshold(double t) const { return lambda_black(t) / 2.0; }
  ColorParams params(double t) const;

 private:
  void check_t(double t) const;
  double p_target_;
};

// A leaf: planar center, depth z <= 0, colour mark u in [0,1), sequence id.
struct ConfettiPoint {
  double x;
  double y;
  double z;
  double u;
  std::uint32_t id;
};

// Initial z-truncation depth. Auto starts at 4 and doubles on demand; fixed
// pins the initial slab but deepening ops may still extend past it.
struct DepthPolicy {
  double initial = 4.0;
  static DepthPolicy auto_deepen() { return {}; }
  static DepthPolicy fixed_depth(double t);
};

// A sampled leaf stack over (window ⊕ margin) x [-T, 0), margin = shape
// diameter so boundary colours are unbiased. Points are stored sorted by
// decreasing z (ties toward larger id, which therefore wins as "higher");
// a uniform spatial hash at cell size = diameter serves colour queries.
//
// The point set is append-only: deepening adds strictly deeper slabs with
// seeds derived from (seed, slab index), so one configuration extended twice
// equals the same configuration extended once, point for point.
class Configuration {
 public:
  static Configuration sample(const Rect& window, const ConfettiShape& shape,
                              const ColorParams& params, std::uint64_t seed,
                              DepthPolicy depth = DepthPolicy::auto_deepen());

  // Assembles a configuration from explicit leaves (used by k-perturbation
  // sampling and by tests). Points are re-sorted; ids must be unique.
  static Configuration from_points(const Rect& window,
                                   const ConfettiShape& shape,
                                   double lambda_total, double depth,
                                   std::vector<ConfettiPoint> points,
                                   std::uint64_t seed);

  const Rect& window() const { return window_; }
  const Rect& sample_region() const { return region_; }
  const ConfettiShape& shape() const { return shape_; }
  double margin() const { return margin_; }
  double depth() const { return depth_; }
  double lambda_total() const { return lambda_total_; }
  std::uint64_t seed() const { return seed_; }
  int slabs() const { return slab_count_; }
  const std::vector<ConfettiPoint>& points() const { return points_; }

  // Index of the highest leaf covering q, if any.
  std::optional<std::uint32_t> top_cover_index(Vec2 q) const;
  bool covered(Vec2 q) const;

  // Colour of q at threshold p: the mark of the top covering leaf, u < p
  // meaning black. Throws UncoveredError when nothing covers q.
  Color color_at(Vec2 q, double p) const;

  Color point_color(std::uint32_t index, double p) const {
    return points_[index].u < p ? Color::Black : Color::White;
  }

  // One deepening step: appends the slab [-2T, -T) with its own derived seed.
  void extend_one_slab();
  // Deepens until depth() >= min_depth.
  void ensure_depth(double min_depth);

 private:
  Configuration() : shape_(ConfettiShape::unit_disk()) {}

  void init_buckets();
  void index_append(std::size_t from);
  int bucket_x(double x) const;
  int bucket_y(double y) const;

  template <class Fn>
  bool scan_candidates(Vec2 q, Fn&& fn) const;  // fn -> true stops the scan

  Rect window_;
  Rect region_;
  ConfettiShape shape_;
  double lambda_total_ = 2.0;
  double margin_ = 0.0;
  double depth_ = 0.0;
  double initial_depth_ = 4.0;
  std::uint64_t seed_ = 0;
  int slab_count_ = 0;
  std::uint32_t next_id_ = 0;
  bool degenerate_ = false;

  std::vector<ConfettiPoint> points_;

  double cell_ = 1.0;
  int nbx_ = 1, nby_ = 1;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

// Returns a configuration (the input, possibly extended) covering every
// probe. Probes must lie in the window. Gives up (DeepeningError) after 20
// doublings; at total intensity 2 a probe is uncovered at depth T with
// probability exp(-2*pi*T) for the unit disk, so this never triggers in
// practice.
Configuration deepen_until_covered(Configuration config,
                                   std::span<const Vec2> probes);

// Lightweight recolouring view: same leaves, colours re-derived at p.
struct ColorView {
  const Configuration* config;
  double p;
  Color color_of(std::uint32_t index) const {
    return config->point_color(index, p);
  }
  std::size_t size() const { return config->points().size(); }
};

ColorView recolor_threshold(const Configuration& config, double p);

}  // namespace confetti
