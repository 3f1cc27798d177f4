#include "confetti/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <unordered_map>

namespace confetti {

namespace {
constexpr double kGridEps = 1e-9;
constexpr std::int64_t kNoSlab = std::numeric_limits<std::int64_t>::min();

int grid_cells(double extent, double pitch) {
  return std::max(1, static_cast<int>(std::floor(extent / pitch + kGridEps)));
}

// Disjoint decomposition of rect \ hole into at most four rectangles.
std::vector<Rect> rect_minus(const Rect& rect, const Rect& hole) {
  std::vector<Rect> parts;
  const Rect clip{std::max(rect.x0, hole.x0), std::max(rect.y0, hole.y0),
                  std::min(rect.x1, hole.x1), std::min(rect.y1, hole.y1)};
  if (clip.x0 >= clip.x1 || clip.y0 >= clip.y1) {
    if (rect.area() > 0.0) parts.push_back(rect);
    return parts;
  }
  auto push = [&parts](double x0, double y0, double x1, double y1) {
    if (x1 > x0 && y1 > y0) parts.push_back(Rect{x0, y0, x1, y1});
  };
  push(rect.x0, rect.y0, clip.x0, rect.y1);          // left band
  push(clip.x1, rect.y0, rect.x1, rect.y1);          // right band
  push(clip.x0, rect.y0, clip.x1, clip.y0);          // bottom middle
  push(clip.x0, clip.y1, clip.x1, rect.y1);          // top middle
  return parts;
}
}  // namespace

long long CubeGrid::cube_count(int k) {
  const long long per_axis = 2LL * k * (1LL << k);
  const long long layers = static_cast<long long>(k) * (1LL << k);
  return per_axis * per_axis * layers;
}

CubeGrid::CubeGrid(const Configuration& config, double p, int k)
    : k_(k),
      delta_(std::ldexp(1.0, -k)),
      p_(p),
      shape_(config.shape()),
      window_(config.window()),
      region_(config.sample_region()),
      lambda_total_(config.lambda_total()),
      depth_(config.depth()),
      source_seed_(config.seed()) {
  if (k < 1 || k > 24) throw ConfigError("cube level k must lie in [1,24]");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("threshold p must lie in [0,1]");
  if (config.depth() < static_cast<double>(k)) {
    throw ConfigError("configuration depth " + std::to_string(config.depth()) +
                      " is shallower than the cube box depth " + std::to_string(k));
  }

  const int nx = 2 * k * (1 << k);
  const int nz = k * (1 << k);
  std::unordered_map<std::int64_t, std::uint8_t> cubes;
  cubes.reserve(config.points().size() * 2);
  for (const ConfettiPoint& pt : config.points()) {
    const std::uint8_t bit = pt.u < p ? 1 : 2;
    const double fx = (pt.x + k_) / delta_;
    const double fy = (pt.y + k_) / delta_;
    const double fz = (pt.z + k_) / delta_;
    const auto ix = static_cast<std::int64_t>(std::floor(fx));
    const auto iy = static_cast<std::int64_t>(std::floor(fy));
    const auto iz = static_cast<std::int64_t>(std::floor(fz));
    if (ix < 0 || ix >= nx || iy < 0 || iy >= nx || iz < 0 || iz >= nz) {
      // Outside cell: beyond the box footprint at any depth, or below it.
      if (bit == 1) outside_black_ = true; else outside_white_ = true;
      continue;
    }
    const std::int64_t packed = (iz * nx + iy) * nx + ix;
    cubes[packed] |= bit;
  }

  entries_.reserve(cubes.size());
  for (const auto& [packed, bits] : cubes) {
    Entry e;
    e.ix = static_cast<std::int32_t>(packed % nx);
    e.iy = static_cast<std::int32_t>((packed / nx) % nx);
    e.iz = static_cast<std::int32_t>(packed / (static_cast<std::int64_t>(nx) * nx));
    e.bits = bits;
    entries_.push_back(e);
  }
  std::sort(entries_.begin(), entries_.end(),
            [nx](const Entry& a, const Entry& b) {
              const std::int64_t pa = (static_cast<std::int64_t>(a.iz) * nx + a.iy) * nx + a.ix;
              const std::int64_t pb = (static_cast<std::int64_t>(b.iz) * nx + b.iy) * nx + b.ix;
              return pa < pb;
            });

  // xy buckets over the box for probe-time candidate lookup.
  bcell_ = std::max(shape_.diameter(), delta_);
  nbx_ = std::max(1, static_cast<int>(std::ceil(2.0 * k / bcell_)));
  nby_ = nbx_;
  buckets_.assign(static_cast<std::size_t>(nbx_) * nby_, {});
  for (std::uint32_t idx = 0; idx < entries_.size(); ++idx) {
    const Entry& e = entries_[idx];
    const double cx = -k_ + (e.ix + 0.5) * delta_;
    const double cy = -k_ + (e.iy + 0.5) * delta_;
    buckets_[static_cast<std::size_t>(bucket_y(cy)) * nbx_ + bucket_x(cx)]
        .push_back(idx);
  }
}

int CubeGrid::bucket_x(double x) const {
  const int b = static_cast<int>(std::floor((x + k_) / bcell_));
  return std::clamp(b, 0, nbx_ - 1);
}

int CubeGrid::bucket_y(double y) const {
  const int b = static_cast<int>(std::floor((y + k_) / bcell_));
  return std::clamp(b, 0, nby_ - 1);
}

Rect CubeGrid::cube_footprint(const Entry& e) const {
  const double x0 = -k_ + e.ix * delta_;
  const double y0 = -k_ + e.iy * delta_;
  return Rect{x0, y0, x0 + delta_, y0 + delta_};
}

RobustColor CubeGrid::robust_color_at(Vec2 q) const {
  const double diam = shape_.diameter();
  if (std::max(std::abs(q.x), std::abs(q.y)) >= k_ - diam) {
    return RobustColor::Mixed;
  }

  // Highest guaranteed slab per colour (always-covering, so the adversary
  // cannot dodge) vs highest reachable slab per colour (can-covering, so the
  // adversary can strike).
  std::int64_t black_always = kNoSlab, black_can = kNoSlab;
  std::int64_t white_always = kNoSlab, white_can = kNoSlab;

  const double reach = shape_.axis_reach() + delta_ / 2.0 + kCoverTol;
  const int bx0 = bucket_x(q.x - reach), bx1 = bucket_x(q.x + reach);
  const int by0 = bucket_y(q.y - reach), by1 = bucket_y(q.y + reach);
  for (int by = by0; by <= by1; ++by) {
    for (int bx = bx0; bx <= bx1; ++bx) {
      for (std::uint32_t idx :
           buckets_[static_cast<std::size_t>(by) * nbx_ + bx]) {
        const Entry& e = entries_[idx];
        const Rect fp = cube_footprint(e);
        if (!shape_.cube_can_cover(fp, q)) continue;
        const bool always = shape_.cube_always_covers(fp, q);
        const std::int64_t slab = e.iz;
        if (e.bits & 1) {
          black_can = std::max(black_can, slab);
          if (always) black_always = std::max(black_always, slab);
        }
        if (e.bits & 2) {
          white_can = std::max(white_can, slab);
          if (always) white_always = std::max(white_always, slab);
        }
      }
    }
  }
  if (outside_black_) black_can = std::max<std::int64_t>(black_can, -1);
  if (outside_white_) white_can = std::max<std::int64_t>(white_can, -1);

  if (black_always != kNoSlab && black_always > white_can) {
    return RobustColor::RobustBlack;
  }
  if (white_always != kNoSlab && white_always > black_can) {
    return RobustColor::RobustWhite;
  }
  return RobustColor::Mixed;
}

Configuration CubeGrid::sample_k_perturbation(std::uint64_t seed) const {
  Engine eng = make_engine(derive_seed(seed, 0x6B706572ull));  // "kper"
  std::vector<ConfettiPoint> pts;
  pts.reserve(entries_.size() * 2 + 64);
  std::uint32_t id = 0;
  const double lb = lambda_total_ * p_;
  const double lw = lambda_total_ * (1.0 - p_);
  const double vol = delta_ * delta_ * delta_;

  auto emit = [&](const Rect& fx, double z0, double z1, bool black, long long n) {
    for (long long i = 0; i < n; ++i) {
      ConfettiPoint pt;
      pt.x = uniform(eng, fx.x0, fx.x1);
      pt.y = uniform(eng, fx.y0, fx.y1);
      pt.z = uniform(eng, z0, z1);
      pt.u = black ? uniform(eng, 0.0, p_) : uniform(eng, p_, 1.0);
      pt.id = id++;
      pts.push_back(pt);
    }
  };

  for (const Entry& e : entries_) {
    const Rect fp = cube_footprint(e);
    const double z0 = -k_ + e.iz * delta_;
    const double z1 = z0 + delta_;
    if (e.bits & 1) emit(fp, z0, z1, true, positive_poisson(eng, lb * vol));
    if (e.bits & 2) emit(fp, z0, z1, false, positive_poisson(eng, lw * vol));
  }

  // Outside cell: the sample region minus the box footprint over the full
  // depth, plus the under-box band below z = -k. Repopulated per colour,
  // conditioned on the presence the original configuration showed.
  const Rect box{-static_cast<double>(k_), -static_cast<double>(k_),
                 static_cast<double>(k_), static_cast<double>(k_)};
  struct Band {
    Rect fx;
    double z0, z1;
  };
  std::vector<Band> bands;
  for (const Rect& part : rect_minus(region_, box)) {
    bands.push_back({part, -depth_, 0.0});
  }
  if (depth_ > static_cast<double>(k_)) {
    const Rect under{std::max(region_.x0, box.x0), std::max(region_.y0, box.y0),
                     std::min(region_.x1, box.x1), std::min(region_.y1, box.y1)};
    if (under.x1 > under.x0 && under.y1 > under.y0) {
      bands.push_back({under, -depth_, -static_cast<double>(k_)});
    }
  }
  double vout = 0.0;
  for (const Band& b : bands) vout += b.fx.area() * (b.z1 - b.z0);

  auto emit_outside = [&](bool black, double lambda) {
    if (vout <= 0.0 || lambda <= 0.0) return;
    const long long n = positive_poisson(eng, lambda * vout);
    for (long long i = 0; i < n; ++i) {
      double pick = uniform(eng, 0.0, vout);
      const Band* chosen = &bands.back();
      for (const Band& b : bands) {
        const double v = b.fx.area() * (b.z1 - b.z0);
        if (pick < v) {
          chosen = &b;
          break;
        }
        pick -= v;
      }
      ConfettiPoint pt;
      pt.x = uniform(eng, chosen->fx.x0, chosen->fx.x1);
      pt.y = uniform(eng, chosen->fx.y0, chosen->fx.y1);
      pt.z = uniform(eng, chosen->z0, chosen->z1);
      pt.u = black ? uniform(eng, 0.0, p_) : uniform(eng, p_, 1.0);
      pt.id = id++;
      pts.push_back(pt);
    }
  };
  if (outside_black_) emit_outside(true, lb);
  if (outside_white_) emit_outside(false, lw);

  return Configuration::from_points(window_, shape_, lambda_total_, depth_,
                                    std::move(pts), seed);
}

OccupancyVector occupancy(const Configuration& config, double p, int k,
                          int max_k) {
  if (k < 1) throw ConfigError("cube level k must be at least 1");
  if (k > max_k) {
    throw ConfigError("cube level k=" + std::to_string(k) +
                      " exceeds the memory cap k<=" + std::to_string(max_k));
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("threshold p must lie in [0,1]");
  if (config.depth() < static_cast<double>(k)) {
    throw ConfigError("configuration depth is shallower than the cube box");
  }

  OccupancyVector v;
  v.k = k;
  v.cubes = CubeGrid::cube_count(k);
  const long long nbits = 2 * v.cubes;
  v.bits.assign(static_cast<std::size_t>((nbits + 63) / 64), 0);

  // Upper half holds "no white leaf" detectors: start all-ones, clear on
  // white. (Empty configuration: black bits all 0, no-white bits all 1.)
  for (long long i = v.cubes; i < nbits; ++i) {
    v.bits[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63);
  }

  const double delta = std::ldexp(1.0, -k);
  const long long nx = 2LL * k * (1LL << k);
  const long long nz = static_cast<long long>(k) * (1LL << k);
  for (const ConfettiPoint& pt : config.points()) {
    const auto ix = static_cast<long long>(std::floor((pt.x + k) / delta));
    const auto iy = static_cast<long long>(std::floor((pt.y + k) / delta));
    const auto iz = static_cast<long long>(std::floor((pt.z + k) / delta));
    if (ix < 0 || ix >= nx || iy < 0 || iy >= nx || iz < 0 || iz >= nz) continue;
    const long long cube = (iz * nx + iy) * nx + ix;
    if (pt.u < p) {
      v.bits[static_cast<std::size_t>(cube >> 6)] |= 1ull << (cube & 63);
    } else {
      const long long i = v.cubes + cube;
      v.bits[static_cast<std::size_t>(i >> 6)] &= ~(1ull << (i & 63));
    }
  }
  return v;
}

RobustGrid robust_raster(const CubeGrid& grid, const Rect& rect, double pitch) {
  if (!(pitch > 0.0)) throw ConfigError("pitch must be positive");
  const double k = grid.k();
  const Rect box{-k, -k, k, k};
  if (!box.contains(rect, kGridEps)) {
    throw ConfigError("rectangle must lie inside the cube box [-k,k]^2");
  }
  RobustGrid out;
  out.origin = {rect.x0, rect.y0};
  out.pitch = pitch;
  out.ncols = grid_cells(rect.width(), pitch);
  out.nrows = grid_cells(rect.height(), pitch);
  out.cells.resize(static_cast<std::size_t>(out.ncols) * out.nrows);
  for (int j = 0; j < out.nrows; ++j) {
    for (int i = 0; i < out.ncols; ++i) {
      const Vec2 c{rect.x0 + (i + 0.5) * pitch, rect.y0 + (j + 0.5) * pitch};
      out.cells[static_cast<std::size_t>(j) * out.ncols + i] =
          grid.robust_color_at(c);
    }
  }
  return out;
}

ColorGrid to_color_grid(const RobustGrid& robust, Color color) {
  const RobustColor own = color == Color::Black ? RobustColor::RobustBlack
                                                : RobustColor::RobustWhite;
  const Color other = color == Color::Black ? Color::White : Color::Black;
  ColorGrid grid(robust.origin, robust.pitch, robust.ncols, robust.nrows);
  for (int j = 0; j < robust.nrows; ++j) {
    for (int i = 0; i < robust.ncols; ++i) {
      grid.set(i, j, robust.at(i, j) == own ? color : other);
    }
  }
  return grid;
}

bool robust_crossing(const CubeGrid& grid, const Rect& rect,
                     Direction direction, Color color, double pitch) {
  const double eff = pitch > 0.0 ? pitch : grid.cube_side();
  const RobustGrid robust = robust_raster(grid, rect, eff);
  return has_crossing(to_color_grid(robust, color), direction, color);
}

}  // namespace confetti
