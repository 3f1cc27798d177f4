#include "confetti/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace confetti {

namespace {
constexpr double kWindowTol = 1e-9;
constexpr int kMaxDoublings = 20;
}  // namespace

ColorParams::ColorParams(double lb, double lw)
    : lambda_black(lb), lambda_white(lw) {
  if (!(lb >= 0.0) || !(lw >= 0.0)) {
    throw ConfigError("colour intensities must be non-negative");
  }
  if (lb + lw <= 0.0) {
    throw ConfigError("total intensity must be positive");
  }
}

ColorParams ColorParams::from_p(double lambda_total, double p) {
  if (!(lambda_total > 0.0)) {
    throw ConfigError("total intensity must be positive");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("black fraction p must lie in [0,1]");
  }
  return ColorParams(lambda_total * p, lambda_total * (1.0 - p));
}

InterpolationPath::InterpolationPath(double p_target) : p_target_(p_target) {
  if (!(p_target > 0.5 && p_target <= 1.0)) {
    throw ConfigError("interpolation target p must lie in (1/2, 1]");
  }
}

void InterpolationPath::check_t(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ConfigError("interpolation time t must lie in [0,1]");
  }
}

double InterpolationPath::lambda_black(double t) const {
  check_t(t);
  return 1.0 + t * (2.0 * p_target_ - 1.0);
}

double InterpolationPath::lambda_white(double t) const {
  check_t(t);
  return 1.0 - t * (2.0 * p_target_ - 1.0);
}

ColorParams InterpolationPath::params(double t) const {
  return ColorParams(lambda_black(t), lambda_white(t));
}

DepthPolicy DepthPolicy::fixed_depth(double t) {
  if (!(t > 0.0)) throw ConfigError("depth must be positive");
  return DepthPolicy{t};
}

Configuration Configuration::sample(const Rect& window,
                                    const ConfettiShape& shape,
                                    const ColorParams& params,
                                    std::uint64_t seed, DepthPolicy depth) {
  if (!window.valid()) throw ConfigError("window has negative extent");
  if (!(params.lambda_total() > 0.0)) {
    throw ConfigError("total intensity must be positive");
  }
  Configuration cfg;
  cfg.window_ = window;
  cfg.shape_ = shape;
  cfg.lambda_total_ = params.lambda_total();
  cfg.seed_ = seed;
  cfg.initial_depth_ = depth.initial;
  cfg.degenerate_ = window.area() <= 0.0;
  // Zero-area windows have no colourable points; keep the configuration
  // empty rather than sampling an inflated margin around nothing.
  cfg.margin_ = cfg.degenerate_ ? 0.0 : shape.diameter();
  cfg.region_ = cfg.degenerate_ ? window : window.expanded(cfg.margin_);
  cfg.init_buckets();
  cfg.extend_one_slab();
  return cfg;
}

Configuration Configuration::from_points(const Rect& window,
                                         const ConfettiShape& shape,
                                         double lambda_total, double depth,
                                         std::vector<ConfettiPoint> points,
                                         std::uint64_t seed) {
  if (!window.valid()) throw ConfigError("window has negative extent");
  if (!(lambda_total > 0.0)) {
    throw ConfigError("total intensity must be positive");
  }
  Configuration cfg;
  cfg.window_ = window;
  cfg.shape_ = shape;
  cfg.lambda_total_ = lambda_total;
  cfg.seed_ = seed;
  cfg.degenerate_ = window.area() <= 0.0;
  cfg.margin_ = cfg.degenerate_ ? 0.0 : shape.diameter();
  cfg.region_ = cfg.degenerate_ ? window : window.expanded(cfg.margin_);
  cfg.depth_ = depth;
  cfg.initial_depth_ = depth > 0.0 ? depth : 4.0;
  cfg.slab_count_ = 1;
  cfg.points_ = std::move(points);
  std::sort(cfg.points_.begin(), cfg.points_.end(),
            [](const ConfettiPoint& a, const ConfettiPoint& b) {
              if (a.z != b.z) return a.z > b.z;
              return a.id > b.id;
            });
  std::uint32_t max_id = 0;
  for (const ConfettiPoint& pt : cfg.points_) max_id = std::max(max_id, pt.id);
  cfg.next_id_ = cfg.points_.empty() ? 0 : max_id + 1;
  cfg.init_buckets();
  cfg.index_append(0);
  return cfg;
}

void Configuration::init_buckets() {
  cell_ = std::max(shape_.diameter(), 1e-6);
  nbx_ = std::max(1, static_cast<int>(std::ceil(region_.width() / cell_)));
  nby_ = std::max(1, static_cast<int>(std::ceil(region_.height() / cell_)));
  buckets_.assign(static_cast<std::size_t>(nbx_) * nby_, {});
}

int Configuration::bucket_x(double x) const {
  const int b = static_cast<int>(std::floor((x - region_.x0) / cell_));
  return std::clamp(b, 0, nbx_ - 1);
}

int Configuration::bucket_y(double y) const {
  const int b = static_cast<int>(std::floor((y - region_.y0) / cell_));
  return std::clamp(b, 0, nby_ - 1);
}

void Configuration::index_append(std::size_t from) {
  for (std::size_t i = from; i < points_.size(); ++i) {
    const ConfettiPoint& pt = points_[i];
    buckets_[static_cast<std::size_t>(bucket_y(pt.y)) * nbx_ + bucket_x(pt.x)]
        .push_back(static_cast<std::uint32_t>(i));
  }
}

void Configuration::extend_one_slab() {
  const int j = slab_count_;
  const double z_hi = j == 0 ? 0.0 : -initial_depth_ * std::ldexp(1.0, j - 1);
  const double z_lo = -initial_depth_ * std::ldexp(1.0, j);
  ++slab_count_;
  depth_ = -z_lo;
  if (degenerate_) return;

  Engine eng = make_engine(derive_seed(seed_, static_cast<std::uint64_t>(j)));
  const double volume = region_.area() * (z_hi - z_lo);
  const long long n = poisson(eng, lambda_total_ * volume);
  const std::size_t base = points_.size();
  points_.reserve(base + static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    ConfettiPoint pt;
    pt.x = uniform(eng, region_.x0, region_.x1);
    pt.y = uniform(eng, region_.y0, region_.y1);
    pt.z = uniform(eng, z_lo, z_hi);
    pt.u = uniform01(eng);
    pt.id = next_id_++;
    points_.push_back(pt);
  }
  // Slabs are disjoint in z and appended shallow-to-deep, so sorting each
  // slab keeps the whole array in decreasing z.
  std::sort(points_.begin() + base, points_.end(),
            [](const ConfettiPoint& a, const ConfettiPoint& b) {
              if (a.z != b.z) return a.z > b.z;
              return a.id > b.id;
            });
  index_append(base);
}

void Configuration::ensure_depth(double min_depth) {
  int steps = 0;
  while (depth_ < min_depth) {
    if (++steps > 64) throw DeepeningError("depth request out of range");
    extend_one_slab();
  }
}

template <class Fn>
bool Configuration::scan_candidates(Vec2 q, Fn&& fn) const {
  const double reach = shape_.axis_reach() + kCoverTol;
  const int bx0 = bucket_x(q.x - reach), bx1 = bucket_x(q.x + reach);
  const int by0 = bucket_y(q.y - reach), by1 = bucket_y(q.y + reach);
  for (int by = by0; by <= by1; ++by) {
    for (int bx = bx0; bx <= bx1; ++bx) {
      for (std::uint32_t idx :
           buckets_[static_cast<std::size_t>(by) * nbx_ + bx]) {
        if (fn(idx)) return true;
      }
    }
  }
  return false;
}

bool Configuration::covered(Vec2 q) const {
  return scan_candidates(q, [&](std::uint32_t idx) {
    const ConfettiPoint& pt = points_[idx];
    return shape_.covers({pt.x, pt.y}, q);
  });
}

std::optional<std::uint32_t> Configuration::top_cover_index(Vec2 q) const {
  // Bucket lists are z-descending by construction; merge-scan them and stop
  // at the first covering leaf.
  const double reach = shape_.axis_reach() + kCoverTol;
  const int bx0 = bucket_x(q.x - reach), bx1 = bucket_x(q.x + reach);
  const int by0 = bucket_y(q.y - reach), by1 = bucket_y(q.y + reach);

  const std::vector<std::uint32_t>* lists[16];
  std::size_t pos[16];
  int nlists = 0;
  for (int by = by0; by <= by1; ++by) {
    for (int bx = bx0; bx <= bx1; ++bx) {
      const auto& lst = buckets_[static_cast<std::size_t>(by) * nbx_ + bx];
      if (!lst.empty() && nlists < 16) {
        lists[nlists] = &lst;
        pos[nlists] = 0;
        ++nlists;
      }
    }
  }
  for (;;) {
    int best = -1;
    for (int l = 0; l < nlists; ++l) {
      if (pos[l] >= lists[l]->size()) continue;
      if (best < 0) {
        best = l;
        continue;
      }
      const ConfettiPoint& a = points_[(*lists[l])[pos[l]]];
      const ConfettiPoint& b = points_[(*lists[best])[pos[best]]];
      if (a.z > b.z || (a.z == b.z && a.id > b.id)) best = l;
    }
    if (best < 0) return std::nullopt;
    const std::uint32_t idx = (*lists[best])[pos[best]++];
    const ConfettiPoint& pt = points_[idx];
    if (shape_.covers({pt.x, pt.y}, q)) return idx;
  }
}

Color Configuration::color_at(Vec2 q, double p) const {
  if (!window_.contains(q, kWindowTol)) {
    throw ConfigError("colour query outside the window");
  }
  const auto top = top_cover_index(q);
  if (!top) throw UncoveredError("no leaf covers the query point");
  return point_color(*top, p);
}

Configuration deepen_until_covered(Configuration config,
                                   std::span<const Vec2> probes) {
  for (const Vec2& q : probes) {
    if (!config.window().contains(q, kWindowTol)) {
      throw ConfigError("probe outside the window");
    }
  }
  std::vector<Vec2> uncovered;
  for (const Vec2& q : probes) {
    if (!config.covered(q)) uncovered.push_back(q);
  }
  int doublings = 0;
  while (!uncovered.empty()) {
    if (doublings >= kMaxDoublings) {
      throw DeepeningError("probes still uncovered after " +
                           std::to_string(kMaxDoublings) + " doublings");
    }
    config.extend_one_slab();
    ++doublings;
    std::vector<Vec2> still;
    for (const Vec2& q : uncovered) {
      if (!config.covered(q)) still.push_back(q);
    }
    uncovered.swap(still);
  }
  return config;
}

ColorView recolor_threshold(const Configuration& config, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("threshold p must lie in [0,1]");
  }
  return ColorView{&config, p};
}

}  // namespace confetti
