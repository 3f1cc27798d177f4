#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "confetti/crossing.hpp"
#include "confetti/discretize.hpp"
#include "confetti/errors.hpp"
#include "confetti/model.hpp"
#include "confetti/rng.hpp"

using namespace confetti;

namespace {

ConfettiPoint leaf(double x, double y, double z, double u, std::uint32_t id) {
  return ConfettiPoint{x, y, z, u, id};
}

Configuration box_config(int k, std::vector<ConfettiPoint> pts,
                         std::uint64_t seed = 1,
                         ConfettiShape shape = ConfettiShape::unit_disk()) {
  const double kk = k;
  return Configuration::from_points({-kk, -kk, kk, kk}, shape, 2.0, kk,
                                    std::move(pts), seed);
}

// Independent cube locator: linear scan over the half-open boundaries.
long long brute_cube_index(int k, double x, double y, double z) {
  const double delta = std::ldexp(1.0, -k);
  const long long nx = 2LL * k * (1LL << k);
  const long long nz = static_cast<long long>(k) * (1LL << k);
  auto locate = [&](double v, long long n) {
    for (long long i = 0; i < n; ++i) {
      if (v >= -k + i * delta && v < -k + (i + 1) * delta) return i;
    }
    return -1LL;
  };
  const long long ix = locate(x, nx), iy = locate(y, nx), iz = locate(z, nz);
  if (ix < 0 || iy < 0 || iz < 0) return -1;
  return (iz * nx + iy) * nx + ix;
}

OccupancyVector brute_occupancy(const Configuration& cfg, double p, int k) {
  OccupancyVector v;
  v.k = k;
  v.cubes = CubeGrid::cube_count(k);
  v.bits.assign(static_cast<std::size_t>((2 * v.cubes + 63) / 64), 0);
  auto set = [&](long long i) {
    v.bits[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63);
  };
  auto clear = [&](long long i) {
    v.bits[static_cast<std::size_t>(i >> 6)] &= ~(1ull << (i & 63));
  };
  for (long long c = 0; c < v.cubes; ++c) set(v.cubes + c);
  for (const ConfettiPoint& pt : cfg.points()) {
    const long long c = brute_cube_index(k, pt.x, pt.y, pt.z);
    if (c < 0) continue;
    if (pt.u < p) set(c);
    else clear(v.cubes + c);
  }
  return v;
}

}  // namespace

TEST_CASE("cube count matches per-axis enumeration") {
  for (int k = 1; k <= 12; ++k) {
    const double delta = std::ldexp(1.0, -k);
    const long long per_axis = std::llround(2.0 * k / delta);
    const long long layers = std::llround(static_cast<double>(k) / delta);
    CHECK(CubeGrid::cube_count(k) == per_axis * per_axis * layers);
  }
  CHECK(CubeGrid::cube_count(1) == 32);
  CHECK(CubeGrid::cube_count(2) == 2048);
  CHECK(CubeGrid::cube_count(3) == 55296);
}

TEST_CASE("occupancy of the empty configuration") {
  const Configuration cfg = box_config(2, {});
  const OccupancyVector v = occupancy(cfg, 0.5, 2);
  CHECK(v.cubes == 2048);
  for (long long i = 0; i < v.cubes; ++i) {
    CHECK_FALSE(v.x(i));          // no black anywhere
    CHECK(v.x(v.cubes + i));      // "no white point" everywhere
  }
}

TEST_CASE("one black point sets exactly one bit") {
  const Configuration cfg = box_config(1, {leaf(0.1, 0.1, -0.1, 0.2, 0)});
  const OccupancyVector v = occupancy(cfg, 0.5, 1);
  // delta = 1/2: (0.1, 0.1, -0.1) lands in (ix, iy, iz) = (2, 2, 1).
  const long long expect = (1 * 4 + 2) * 4 + 2;
  for (long long i = 0; i < v.cubes; ++i) {
    CHECK(v.x(i) == (i == expect));
    CHECK(v.x(v.cubes + i));
  }
  // the same point as white clears the complement bit instead
  const Configuration wcfg = box_config(1, {leaf(0.1, 0.1, -0.1, 0.9, 0)});
  const OccupancyVector w = occupancy(wcfg, 0.5, 1);
  for (long long i = 0; i < w.cubes; ++i) {
    CHECK_FALSE(w.x(i));
    CHECK(w.x(w.cubes + i) == (i != expect));
  }
}

TEST_CASE("occupancy equals the brute-force point-in-cube scan") {
  for (int k : {1, 2}) {
    for (int rep = 0; rep < 25; ++rep) {
      const Configuration cfg = Configuration::sample(
          {-static_cast<double>(k), -static_cast<double>(k),
           static_cast<double>(k), static_cast<double>(k)},
          ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.5),
          derive_seed(1201 + k, rep), DepthPolicy::fixed_depth(k));
      const double p = 0.3 + 0.2 * (rep % 3);
      CHECK(occupancy(cfg, p, k) == brute_occupancy(cfg, p, k));
    }
  }
}

TEST_CASE("occupancy preconditions: k range, memory cap, depth") {
  const Configuration cfg = box_config(2, {});
  CHECK_THROWS_AS(occupancy(cfg, 0.5, 0), ConfigError);
  CHECK_THROWS_AS(occupancy(cfg, 0.5, 8), ConfigError);   // default cap k <= 7
  CHECK_THROWS_AS(occupancy(cfg, 0.5, 3), ConfigError);   // depth 2 < k
  CHECK_THROWS_AS(occupancy(cfg, -0.1, 2), ConfigError);
  CHECK_THROWS_AS(CubeGrid(cfg, 0.5, 0), ConfigError);
  CHECK_THROWS_AS(CubeGrid(cfg, 0.5, 25), ConfigError);
  CHECK_THROWS_AS(CubeGrid(cfg, 0.5, 3), ConfigError);
  CHECK_THROWS_AS(CubeGrid(cfg, 1.5, 2), ConfigError);
}

TEST_CASE("black-bit frequency matches 1 - exp(-lambda_b / 8^k)") {
  const int k = 1;
  const InterpolationPath path(0.8);
  for (double t : {0.0, 1.0}) {
    const double lb = path.lambda_black(t);
    const double lw = path.lambda_white(t);
    const double p = path.threshold(t);
    const double q_black = 1.0 - std::exp(-lb * 0.125);  // cube volume 2^-3k
    const double q_nowhite = std::exp(-lw * 0.125);
    const int n_seeds = 400;
    long long blacks = 0, nowhites = 0;
    for (int s = 0; s < n_seeds; ++s) {
      const Configuration cfg = Configuration::sample(
          {-1, -1, 1, 1}, ConfettiShape::unit_disk(), ColorParams(lb, lw),
          derive_seed(1210 + static_cast<int>(10 * t), s),
          DepthPolicy::fixed_depth(1));
      const OccupancyVector v = occupancy(cfg, p, 1);
      for (long long i = 0; i < v.cubes; ++i) {
        blacks += v.x(i);
        nowhites += v.x(v.cubes + i);
      }
    }
    const double n = static_cast<double>(n_seeds) * CubeGrid::cube_count(k);
    const double sd_b = std::sqrt(n * q_black * (1 - q_black));
    const double sd_w = std::sqrt(n * q_nowhite * (1 - q_nowhite));
    CHECK(std::abs(blacks - n * q_black) <= 4.0 * sd_b);
    CHECK(std::abs(nowhites - n * q_nowhite) <= 4.0 * sd_w);
  }
}

TEST_CASE("cube grid entries agree with the dense occupancy bits") {
  const Configuration cfg = Configuration::sample(
      {-2, -2, 2, 2}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.5),
      1211, DepthPolicy::fixed_depth(2));
  const int k = 2;
  const CubeGrid grid(cfg, 0.5, k);
  const OccupancyVector v = occupancy(cfg, 0.5, k);
  const long long nx = 2LL * k * (1LL << k);

  long long black_bits = 0, white_bits = 0;
  for (long long i = 0; i < v.cubes; ++i) {
    black_bits += v.x(i);
    white_bits += !v.x(v.cubes + i);
  }
  long long black_entries = 0, white_entries = 0;
  for (const CubeGrid::Entry& e : grid.entries()) {
    const long long cube = (static_cast<long long>(e.iz) * nx + e.iy) * nx + e.ix;
    if (e.bits & 1) {
      ++black_entries;
      CHECK(v.x(cube));
    }
    if (e.bits & 2) {
      ++white_entries;
      CHECK_FALSE(v.x(v.cubes + cube));
    }
  }
  CHECK(black_entries == black_bits);
  CHECK(white_entries == white_bits);
}

TEST_CASE("probes near the box boundary answer Mixed") {
  const Configuration cfg = box_config(3, {leaf(2.1, 0, -0.05, 0.2, 0)});
  const CubeGrid grid(cfg, 0.5, 3);
  // k - diameter = 1 for the unit disk
  CHECK(grid.robust_color_at({2.1, 0.0}) == RobustColor::Mixed);
  CHECK(grid.robust_color_at({0.0, 1.0}) == RobustColor::Mixed);
  CHECK(grid.robust_color_at({0.0, -2.9}) == RobustColor::Mixed);
}

TEST_CASE("lone always-covering black cube wins deep inside the box") {
  const Configuration cfg = box_config(3, {leaf(0, 0, -0.5, 0.2, 0)});
  const CubeGrid grid(cfg, 0.5, 3);
  CHECK(grid.robust_color_at({0.0, 0.0}) == RobustColor::RobustBlack);
  CHECK(grid.robust_color_at({0.5, 0.5}) == RobustColor::RobustBlack);
  // far from the leaf's cube nothing guarantees coverage
  CHECK(grid.robust_color_at({-0.9, 0.9}) == RobustColor::Mixed);
  // colour swap gives the symmetric answer
  const Configuration wcfg = box_config(3, {leaf(0, 0, -0.5, 0.8, 0)});
  const CubeGrid wgrid(wcfg, 0.5, 3);
  CHECK(wgrid.robust_color_at({0.0, 0.0}) == RobustColor::RobustWhite);
}

TEST_CASE("white cube that can strike from above forces Mixed") {
  // Black cube always covers q from slab 20; white cube in the top slab can
  // (but need not) cover q, so the adversary can paint q either way.
  const Configuration cfg = box_config(
      3, {leaf(0, 0, -0.5, 0.2, 0), leaf(0.95, 0, -0.05, 0.7, 1)});
  const CubeGrid grid(cfg, 0.5, 3);
  CHECK(grid.robust_color_at({0.0, 0.0}) == RobustColor::Mixed);

  // ... and an explicit adversarial perturbation realizes the strike: move
  // the white point to the near corner of its cube.
  const Configuration strike = box_config(
      3, {leaf(0, 0, -0.5, 0.2, 0), leaf(0.876, 0.001, -0.05, 0.7, 1)}, 2);
  CHECK(occupancy(strike, 0.5, 3) == occupancy(cfg, 0.5, 3));
  CHECK(strike.color_at({0.0, 0.0}, 0.5) == Color::White);
  // while a far-corner placement leaves q black
  const Configuration spare = box_config(
      3, {leaf(0, 0, -0.5, 0.2, 0), leaf(0.999, 0.124, -0.05, 0.7, 1)}, 3);
  CHECK(occupancy(spare, 0.5, 3) == occupancy(cfg, 0.5, 3));
  CHECK(spare.color_at({0.0, 0.0}, 0.5) == Color::Black);
}

TEST_CASE("white strictly below an always-covering black cube cannot strike") {
  const Configuration cfg = box_config(
      3, {leaf(0, 0, -0.5, 0.2, 0), leaf(0.95, 0, -0.7, 0.7, 1)});
  const CubeGrid grid(cfg, 0.5, 3);
  CHECK(grid.robust_color_at({0.0, 0.0}) == RobustColor::RobustBlack);
}

TEST_CASE("outside-region occupants act as a floor-level threat") {
  // A white point outside the box footprint: it may cover q from below the
  // box in some perturbation, but never from above an in-box guarantee.
  const Configuration with_guard = box_config(
      3, {leaf(0, 0, -0.5, 0.2, 0), leaf(4.5, 0, -1.0, 0.9, 1)});
  const CubeGrid guarded(with_guard, 0.5, 3);
  CHECK(guarded.outside_has_white());
  CHECK(guarded.robust_color_at({0.0, 0.0}) == RobustColor::RobustBlack);

  // Without any in-box guarantee the outside white keeps q from being
  // robustly black even where a black cube can reach it.
  const Configuration no_guard = box_config(
      3, {leaf(0.95, 0, -0.5, 0.2, 0), leaf(4.5, 0, -1.0, 0.9, 1)});
  const CubeGrid unguarded(no_guard, 0.5, 3);
  CHECK(unguarded.robust_color_at({0.0, 0.0}) == RobustColor::Mixed);

  // An outside-only configuration guarantees nothing anywhere.
  const Configuration outside_only = box_config(
      3, {leaf(4.5, 0, -1.0, 0.1, 0)});
  const CubeGrid floating(outside_only, 0.5, 3);
  CHECK(floating.outside_has_black());
  CHECK(floating.robust_color_at({0.0, 0.0}) == RobustColor::Mixed);
}

TEST_CASE("robust raster: geometry, preconditions, crossing trivia") {
  const Configuration cfg = box_config(3, {leaf(0, 0, -0.05, 0.2, 0)});
  const CubeGrid grid(cfg, 0.5, 3);
  const Rect rect{-0.3, -0.3, 0.3, 0.3};
  const RobustGrid raster = robust_raster(grid, rect, 0.1);
  CHECK(raster.ncols == 6);
  CHECK(raster.nrows == 6);
  for (int j = 0; j < raster.nrows; ++j)
    for (int i = 0; i < raster.ncols; ++i)
      CHECK(raster.at(i, j) == RobustColor::RobustBlack);

  CHECK(robust_crossing(grid, rect, Direction::Horizontal, Color::Black));
  CHECK(robust_crossing(grid, rect, Direction::Vertical, Color::Black));
  CHECK_FALSE(robust_crossing(grid, rect, Direction::Horizontal, Color::White));
  CHECK_FALSE(robust_crossing(grid, rect, Direction::Vertical, Color::White));

  CHECK_THROWS_AS(robust_raster(grid, {-4, 0, 0, 1}, 0.1), ConfigError);
  CHECK_THROWS_AS(robust_raster(grid, rect, 0.0), ConfigError);
}

TEST_CASE("a full Mixed column blocks black robust crossings") {
  RobustGrid g;
  g.origin = {0, 0};
  g.pitch = 1.0;
  g.ncols = 5;
  g.nrows = 4;
  g.cells.assign(20, RobustColor::RobustBlack);
  for (int j = 0; j < 4; ++j) g.cells[j * 5 + 2] = RobustColor::Mixed;
  const ColorGrid black_view = to_color_grid(g, Color::Black);
  CHECK_FALSE(has_crossing(black_view, Direction::Horizontal, Color::Black));
  CHECK(has_crossing(black_view, Direction::Vertical, Color::Black));
  // Mixed counts for nobody: the white view reads it as black.
  const ColorGrid white_view = to_color_grid(g, Color::White);
  CHECK(white_view.count(Color::White) == 0);
}

TEST_CASE("perturbing and re-extracting occupancy is the identity") {
  for (int rep = 0; rep < 10; ++rep) {
    const Configuration cfg = Configuration::sample(
        {-3, -3, 3, 3}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.4),
        derive_seed(1215, rep), DepthPolicy::fixed_depth(3));
    const CubeGrid grid(cfg, 0.4, 3);
    const OccupancyVector original = occupancy(cfg, 0.4, 3);
    for (int s = 0; s < 5; ++s) {
      const Configuration pert = grid.sample_k_perturbation(derive_seed(rep, s));
      CHECK(occupancy(pert, 0.4, 3) == original);
      const CubeGrid pgrid(pert, 0.4, 3);
      CHECK(pgrid.outside_has_black() == grid.outside_has_black());
      CHECK(pgrid.outside_has_white() == grid.outside_has_white());
      REQUIRE(pgrid.entries().size() == grid.entries().size());
      for (std::size_t i = 0; i < grid.entries().size(); ++i) {
        CHECK(pgrid.entries()[i].ix == grid.entries()[i].ix);
        CHECK(pgrid.entries()[i].iy == grid.entries()[i].iy);
        CHECK(pgrid.entries()[i].iz == grid.entries()[i].iz);
        CHECK(pgrid.entries()[i].bits == grid.entries()[i].bits);
      }
    }
  }
}

TEST_CASE("k-perturbation sampling is deterministic in the seed") {
  const Configuration cfg = Configuration::sample(
      {-3, -3, 3, 3}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.5),
      1216, DepthPolicy::fixed_depth(3));
  const CubeGrid grid(cfg, 0.5, 3);
  const Configuration a = grid.sample_k_perturbation(99);
  const Configuration b = grid.sample_k_perturbation(99);
  const Configuration c = grid.sample_k_perturbation(100);
  REQUIRE(a.points().size() == b.points().size());
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    CHECK(a.points()[i].x == b.points()[i].x);
    CHECK(a.points()[i].z == b.points()[i].z);
    CHECK(a.points()[i].u == b.points()[i].u);
  }
  bool differs = c.points().size() != a.points().size();
  if (!differs && !a.points().empty())
    differs = a.points()[0].x != c.points()[0].x;
  CHECK(differs);
}

TEST_CASE("empty grid perturbs to an empty configuration") {
  const Configuration cfg = box_config(3, {});
  const CubeGrid grid(cfg, 0.5, 3);
  const Configuration pert = grid.sample_k_perturbation(5);
  CHECK(pert.points().empty());
}

TEST_CASE("robust colours survive one hundred sampled perturbations") {
  Engine eng = make_engine(1217);
  long robust_probes = 0, pair_checks = 0;
  for (int rep = 0; rep < 4; ++rep) {
    const Configuration cfg = Configuration::sample(
        {-3, -3, 3, 3}, ConfettiShape::unit_disk(),
        ColorParams::from_p(2.0, 0.5), derive_seed(1218, rep),
        DepthPolicy::fixed_depth(3));
    const CubeGrid grid(cfg, 0.5, 3);

    std::vector<Vec2> probes;
    std::vector<RobustColor> verdicts;
    for (int qi = 0; qi < 40; ++qi) {
      const Vec2 q{uniform(eng, -0.95, 0.95), uniform(eng, -0.95, 0.95)};
      const RobustColor rc = grid.robust_color_at(q);
      if (rc == RobustColor::Mixed) continue;
      probes.push_back(q);
      verdicts.push_back(rc);
      // the original configuration is itself a k-perturbation
      const Color own = cfg.color_at(q, 0.5);
      CHECK((rc == RobustColor::RobustBlack) == (own == Color::Black));
      ++robust_probes;
    }
    for (int s = 0; s < 100; ++s) {
      Configuration pert = grid.sample_k_perturbation(derive_seed(rep, s));
      for (std::size_t i = 0; i < probes.size(); ++i) {
        const Color got = pert.color_at(probes[i], 0.5);
        const Color want = verdicts[i] == RobustColor::RobustBlack
                               ? Color::Black
                               : Color::White;
        REQUIRE(got == want);
        ++pair_checks;
      }
    }
  }
  CHECK(robust_probes >= 20);   // the suite must exercise real verdicts
  CHECK(pair_checks >= 2000);
}

TEST_CASE("refinement: a robust verdict at level k persists at level k+1") {
  int nontrivial = 0;
  for (int rep = 0; rep < 12; ++rep) {
    Configuration cfg = Configuration::sample(
        {-4, -4, 4, 4}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.5),
        derive_seed(1219, rep), DepthPolicy::fixed_depth(4));
    const CubeGrid coarse(cfg, 0.5, 3);
    const CubeGrid fine(cfg, 0.5, 4);
    Engine eng = make_engine(derive_seed(1220, rep));
    for (int qi = 0; qi < 200; ++qi) {
      const Vec2 q{uniform(eng, -0.9, 0.9), uniform(eng, -0.9, 0.9)};
      const RobustColor at_k = coarse.robust_color_at(q);
      if (at_k == RobustColor::Mixed) continue;
      CHECK(fine.robust_color_at(q) == at_k);
      ++nontrivial;
    }
  }
  CHECK(nontrivial >= 200);
}

TEST_CASE("Mixed area fraction shrinks as k grows") {
  long mixed[2] = {0, 0};
  long total = 0;
  for (int rep = 0; rep < 8; ++rep) {
    Configuration cfg = Configuration::sample(
        {-4, -4, 4, 4}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.5),
        derive_seed(1221, rep), DepthPolicy::fixed_depth(4));
    const Rect rect{-0.8, -0.8, 0.8, 0.8};
    const double pitch = std::ldexp(1.0, -4);
    int ki = 0;
    for (int k : {3, 4}) {
      const CubeGrid grid(cfg, 0.5, k);
      const RobustGrid raster = robust_raster(grid, rect, pitch);
      for (RobustColor c : raster.cells) mixed[ki] += c == RobustColor::Mixed;
      if (ki == 0) total += static_cast<long>(raster.cells.size());
      ++ki;
    }
  }
  CHECK(mixed[1] <= mixed[0]);
  CHECK(mixed[0] < total);  // and some cells resolve even at k = 3
}

TEST_CASE("robust crossings are monotone in k and below the continuum") {
  int robust_hits = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Configuration cfg = Configuration::sample(
        {-4, -4, 4, 4}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.6),
        derive_seed(1222, rep), DepthPolicy::fixed_depth(4));
    const Rect rect{-0.8, -0.8, 0.8, 0.8};
    const double pitch = std::ldexp(1.0, -4);
    const CubeGrid coarse(cfg, 0.6, 3);
    const CubeGrid fine(cfg, 0.6, 4);
    for (Direction dir : {Direction::Horizontal, Direction::Vertical}) {
      for (Color color : {Color::Black, Color::White}) {
        const bool at3 = robust_crossing(coarse, rect, dir, color, pitch);
        const bool at4 = robust_crossing(fine, rect, dir, color, pitch);
        const ColorGrid cont =
            threshold_grid(rasterize_marks(cfg, rect, pitch), 0.6);
        const bool continuum = has_crossing(cont, dir, color);
        if (at3) CHECK(at4);
        if (at4) CHECK(continuum);
        robust_hits += at3;
      }
    }
  }
  CHECK(robust_hits > 0);
}

TEST_CASE("square confetti obey the same robust rules at feasible k") {
  // diameter = 2*sqrt(2)*hw; with hw = 1 the Mixed margin is ~2.83, so k = 4
  // leaves a usable core.
  const ConfettiShape sq = ConfettiShape::square(1.0);
  const Configuration cfg = Configuration::from_points(
      {-4, -4, 4, 4}, sq, 2.0, 4.0, {leaf(0, 0, -0.5, 0.2, 0)}, 1);
  const CubeGrid grid(cfg, 0.5, 4);
  CHECK(grid.robust_color_at({0.0, 0.0}) == RobustColor::RobustBlack);
  CHECK(grid.robust_color_at({0.0, 3.0}) == RobustColor::Mixed);  // margin
  CHECK(grid.robust_color_at({0.5, -0.5}) == RobustColor::RobustBlack);
  CHECK(grid.robust_color_at({-1.2, 0.0}) == RobustColor::Mixed);
}
