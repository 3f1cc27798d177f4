#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "confetti/errors.hpp"
#include "confetti/model.hpp"
#include "confetti/rng.hpp"

using namespace confetti;

namespace {

// Independent colour oracle: scan every point, keep the highest covering
// leaf under the same (z, id) order the configuration uses.
std::optional<std::uint32_t> brute_top_cover(const Configuration& cfg, Vec2 q) {
  std::optional<std::uint32_t> best;
  const auto& pts = cfg.points();
  for (std::uint32_t i = 0; i < pts.size(); ++i) {
    if (!cfg.shape().covers({pts[i].x, pts[i].y}, q)) continue;
    if (!best) {
      best = i;
      continue;
    }
    const ConfettiPoint& a = pts[i];
    const ConfettiPoint& b = pts[*best];
    if (a.z > b.z || (a.z == b.z && a.id > b.id)) best = i;
  }
  return best;
}

ConfettiPoint leaf(double x, double y, double z, double u, std::uint32_t id) {
  return ConfettiPoint{x, y, z, u, id};
}

}  // namespace

TEST_CASE("colour intensity pairs validate and derive p") {
  const ColorParams cp(1.5, 0.5);
  CHECK(cp.lambda_total() == 2.0);
  CHECK(cp.p() == 0.75);
  const ColorParams from = ColorParams::from_p(2.0, 0.75);
  CHECK(from.lambda_black == 1.5);
  CHECK(from.lambda_white == 0.5);
  CHECK(ColorParams(0.0, 1.0).p() == 0.0);
  CHECK(ColorParams(1.0, 0.0).p() == 1.0);
  CHECK_THROWS_AS(ColorParams(-1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(ColorParams(0.0, 0.0), ConfigError);
  CHECK_THROWS_AS(ColorParams::from_p(0.0, 0.5), ConfigError);
  CHECK_THROWS_AS(ColorParams::from_p(2.0, 1.5), ConfigError);
}

TEST_CASE("interpolation path endpoints and constant total intensity") {
  const InterpolationPath path(0.8);
  CHECK(path.lambda_black(0.0) == 1.0);
  CHECK(path.lambda_white(0.0) == 1.0);
  CHECK(path.threshold(0.0) == 0.5);
  // 2p and 2p-1 are exact in binary floating point for p in (1/2, 1], so the
  // t = 1 endpoint must land on the target bit-for-bit.
  CHECK(path.lambda_black(1.0) == 2.0 * 0.8);
  CHECK(path.threshold(1.0) == 0.8);
  for (double t : {0.0, 0.1, 0.25, 0.5, 0.77, 1.0}) {
    CHECK(path.lambda_black(t) + path.lambda_white(t) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(path.params(t).lambda_total() == doctest::Approx(2.0));
  }
  for (double pt : {0.6, 0.75, 0.9, 1.0}) {
    CHECK(InterpolationPath(pt).threshold(1.0) == pt);
  }
  CHECK_THROWS_AS(InterpolationPath(0.5), ConfigError);
  CHECK_THROWS_AS(InterpolationPath(1.1), ConfigError);
  CHECK_THROWS_AS(path.lambda_black(-0.1), ConfigError);
  CHECK_THROWS_AS(path.lambda_black(1.1), ConfigError);
}

TEST_CASE("sampled point counts match the Poisson mean: 2*(14*14)*5 = 1960") {
  const Rect window{0, 0, 10, 10};
  const ColorParams params(1.0, 1.0);  // lambda_total = 2
  const ConfettiShape disk = ConfettiShape::unit_disk();
  const int n_seeds = 200;
  const double expected = 2.0 * (14.0 * 14.0) * 5.0;

  double sum = 0.0;
  for (int s = 0; s < n_seeds; ++s) {
    const Configuration cfg = Configuration::sample(
        window, disk, params, derive_seed(901, s), DepthPolicy::fixed_depth(5));
    CHECK(cfg.margin() == 2.0);
    CHECK(cfg.depth() == 5.0);
    CHECK(cfg.sample_region().width() == 14.0);
    sum += static_cast<double>(cfg.points().size());
  }
  const double mean = sum / n_seeds;
  const double sigma_mean = std::sqrt(expected / n_seeds);
  CHECK(std::abs(mean - expected) <= 3.0 * sigma_mean);
}

TEST_CASE("point counts match Poisson mean and variance to 4 sigma") {
  const Rect window{0, 0, 4, 3};
  const ColorParams params = ColorParams::from_p(3.0, 0.5);
  const ConfettiShape disk = ConfettiShape::unit_disk();
  const int n_seeds = 300;
  // region (4+4) x (3+4), depth 4
  const double lambda = 3.0 * (8.0 * 7.0) * 4.0;

  std::vector<double> counts;
  for (int s = 0; s < n_seeds; ++s) {
    counts.push_back(static_cast<double>(
        Configuration::sample(window, disk, params, derive_seed(902, s),
                              DepthPolicy::fixed_depth(4))
            .points()
            .size()));
  }
  double mean = 0.0;
  for (double c : counts) mean += c;
  mean /= n_seeds;
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= (n_seeds - 1);

  CHECK(std::abs(mean - lambda) <= 4.0 * std::sqrt(lambda / n_seeds));
  // Var(sample variance) ~ (mu4 - sigma^4)/n = (lambda + 2 lambda^2)/n
  const double sd_var = std::sqrt((lambda + 2.0 * lambda * lambda) / n_seeds);
  CHECK(std::abs(var - lambda) <= 4.0 * sd_var);
}

TEST_CASE("sampled points satisfy the structural invariants") {
  const Configuration cfg = Configuration::sample(
      {0, 0, 6, 5}, ConfettiShape::square(0.5), ColorParams::from_p(2.0, 0.6),
      424242, DepthPolicy::fixed_depth(3));
  const auto& pts = cfg.points();
  REQUIRE(!pts.empty());
  std::set<std::uint32_t> ids;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(cfg.sample_region().contains(Vec2{pts[i].x, pts[i].y}));
    CHECK(pts[i].z <= 0.0);
    CHECK(pts[i].z >= -cfg.depth());
    CHECK(pts[i].u >= 0.0);
    CHECK(pts[i].u < 1.0);
    CHECK(ids.insert(pts[i].id).second);  // unique ids
    if (i > 0) {
      const bool ordered = pts[i - 1].z > pts[i].z ||
                           (pts[i - 1].z == pts[i].z && pts[i - 1].id > pts[i].id);
      CHECK(ordered);
    }
  }
}

TEST_CASE("zero-area window yields an empty configuration") {
  for (const Rect& w : {Rect{0, 0, 0, 10}, Rect{3, 3, 3, 3}}) {
    Configuration cfg =
        Configuration::sample(w, ConfettiShape::unit_disk(),
                              ColorParams::from_p(2.0, 0.5), 7, {});
    CHECK(cfg.points().empty());
    cfg.extend_one_slab();
    CHECK(cfg.points().empty());
  }
  CHECK_THROWS_AS(Configuration::sample({1, 1, 0, 0}, ConfettiShape::unit_disk(),
                                        ColorParams::from_p(2.0, 0.5), 7, {}),
                  ConfigError);
}

TEST_CASE("same seed reproduces the configuration point for point") {
  const Rect window{-3, -2, 5, 4};
  const ColorParams params = ColorParams::from_p(2.0, 0.4);
  Configuration a = Configuration::sample(window, ConfettiShape::unit_disk(),
                                          params, 555, {});
  Configuration b = Configuration::sample(window, ConfettiShape::unit_disk(),
                                          params, 555, {});
  a.extend_one_slab();
  b.extend_one_slab();
  REQUIRE(a.points().size() == b.points().size());
  CHECK(a.depth() == b.depth());
  CHECK(a.slabs() == b.slabs());
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    CHECK(a.points()[i].x == b.points()[i].x);
    CHECK(a.points()[i].y == b.points()[i].y);
    CHECK(a.points()[i].z == b.points()[i].z);
    CHECK(a.points()[i].u == b.points()[i].u);
    CHECK(a.points()[i].id == b.points()[i].id);
  }

  // a different seed gives a different draw
  const Configuration c = Configuration::sample(
      window, ConfettiShape::unit_disk(), params, 556, {});
  bool differs = c.points().size() != a.points().size();
  if (!differs && !a.points().empty()) differs = a.points()[0].x != c.points()[0].x;
  CHECK(differs);
}

TEST_CASE("deepening twice equals deepening once, point for point") {
  const Rect window{0, 0, 4, 4};
  const ColorParams params = ColorParams::from_p(2.0, 0.5);
  Configuration once = Configuration::sample(window, ConfettiShape::unit_disk(),
                                             params, 88, {});
  Configuration twice = Configuration::sample(
      window, ConfettiShape::unit_disk(), params, 88, {});
  once.ensure_depth(16.0);
  twice.extend_one_slab();
  twice.extend_one_slab();
  REQUIRE(once.depth() == twice.depth());
  REQUIRE(once.points().size() == twice.points().size());
  for (std::size_t i = 0; i < once.points().size(); ++i) {
    CHECK(once.points()[i].z == twice.points()[i].z);
    CHECK(once.points()[i].id == twice.points()[i].id);
  }
}

TEST_CASE("colour of a single covering leaf follows its mark") {
  const Configuration cfg = Configuration::from_points(
      {-2, -2, 2, 2}, ConfettiShape::unit_disk(), 2.0, 4.0,
      {leaf(0, 0, -1.0, 0.3, 0)}, 1);
  CHECK(cfg.color_at({0.5, 0.0}, 0.5) == Color::Black);
  CHECK(cfg.color_at({0.5, 0.0}, 0.3 - 1e-12) == Color::White);
}

TEST_CASE("the higher of two covering leaves decides the colour") {
  const Configuration cfg = Configuration::from_points(
      {-2, -2, 2, 2}, ConfettiShape::unit_disk(), 2.0, 4.0,
      {leaf(0, 0, -2.0, 0.1, 0), leaf(0.5, 0, -1.0, 0.9, 1)}, 1);
  CHECK(cfg.color_at({0.4, 0.0}, 0.5) == Color::White);
  // outside the higher leaf's footprint the lower one shows through
  CHECK(cfg.color_at({-0.6, 0.0}, 0.5) == Color::Black);
}

TEST_CASE("colour queries outside the window or coverage are errors") {
  const Configuration cfg = Configuration::from_points(
      {-2, -2, 2, 2}, ConfettiShape::unit_disk(), 2.0, 4.0, {}, 1);
  CHECK_THROWS_AS(cfg.color_at({3.0, 0.0}, 0.5), ConfigError);
  CHECK_THROWS_AS(cfg.color_at({0.0, 0.0}, 0.5), UncoveredError);
}

TEST_CASE("indexed colour queries equal the brute-force scan") {
  Engine eng = make_engine(903);
  long queries = 0;
  for (int rep = 0; rep < 12; ++rep) {
    const ConfettiShape shape = rep % 2 == 0 ? ConfettiShape::unit_disk()
                                             : ConfettiShape::square(0.8);
    Configuration cfg = Configuration::sample(
        {0, 0, 6, 6}, shape, ColorParams::from_p(2.0, 0.5),
        derive_seed(904, rep), DepthPolicy::fixed_depth(6));
    for (int qi = 0; qi < 100; ++qi) {
      const Vec2 q{uniform(eng, 0, 6), uniform(eng, 0, 6)};
      const auto brute = brute_top_cover(cfg, q);
      const auto fast = cfg.top_cover_index(q);
      REQUIRE(brute.has_value() == fast.has_value());
      if (brute) {
        CHECK(*brute == *fast);
        CHECK(cfg.color_at(q, 0.5) == cfg.point_color(*brute, 0.5));
      }
      ++queries;
    }
  }
  CHECK(queries == 1200);
}

TEST_CASE("small explicit configurations agree with the brute-force oracle") {
  Engine eng = make_engine(905);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<ConfettiPoint> pts;
    const int n = 1 + static_cast<int>(uniform(eng, 0, 10));
    for (int i = 0; i < n; ++i) {
      pts.push_back(leaf(uniform(eng, -2, 2), uniform(eng, -2, 2),
                         uniform(eng, -4, 0), uniform01(eng),
                         static_cast<std::uint32_t>(i)));
    }
    const Configuration cfg = Configuration::from_points(
        {-1, -1, 1, 1}, ConfettiShape::unit_disk(), 2.0, 4.0, pts, 1);
    for (int qi = 0; qi < 5; ++qi) {
      const Vec2 q{uniform(eng, -1, 1), uniform(eng, -1, 1)};
      const auto brute = brute_top_cover(cfg, q);
      const auto fast = cfg.top_cover_index(q);
      REQUIRE(brute.has_value() == fast.has_value());
      if (brute) CHECK(*brute == *fast);
    }
  }
}

TEST_CASE("deepen_until_covered leaves covering configurations unchanged") {
  Configuration cfg = Configuration::sample({0, 0, 3, 3},
                                            ConfettiShape::unit_disk(),
                                            ColorParams::from_p(2.0, 0.5), 77,
                                            DepthPolicy::fixed_depth(8));
  const std::vector<Vec2> probes{{0.5, 0.5}, {1.5, 1.5}, {2.5, 2.5}};
  for (const Vec2& q : probes) REQUIRE(cfg.covered(q));
  const std::size_t before = cfg.points().size();
  const double depth_before = cfg.depth();
  const Configuration after = deepen_until_covered(std::move(cfg), probes);
  CHECK(after.points().size() == before);
  CHECK(after.depth() == depth_before);
}

TEST_CASE("deepen_until_covered covers a probe starting from nothing") {
  Configuration empty = Configuration::from_points(
      {-1, -1, 1, 1}, ConfettiShape::unit_disk(), 2.0, 0.5, {}, 99);
  REQUIRE(empty.points().empty());
  const std::vector<Vec2> probes{{0.0, 0.0}};
  const Configuration covered = deepen_until_covered(std::move(empty), probes);
  CHECK(covered.covered({0.0, 0.0}));
  CHECK(covered.color_at({0.0, 0.0}, 1.0) == Color::Black);
}

TEST_CASE("probes outside the window are rejected") {
  Configuration cfg = Configuration::sample({0, 0, 2, 2},
                                            ConfettiShape::unit_disk(),
                                            ColorParams::from_p(2.0, 0.5), 1, {});
  const std::vector<Vec2> probes{{5.0, 0.0}};
  CHECK_THROWS_AS(deepen_until_covered(std::move(cfg), probes), ConfigError);
}

TEST_CASE("recolouring view: p=0 all white, p=1 all black, monotone in p") {
  const Configuration cfg = Configuration::sample(
      {0, 0, 5, 5}, ConfettiShape::unit_disk(), ColorParams::from_p(2.0, 0.5),
      906, {});
  REQUIRE(!cfg.points().empty());
  const ColorView at0 = recolor_threshold(cfg, 0.0);
  const ColorView at1 = recolor_threshold(cfg, 1.0);
  for (std::uint32_t i = 0; i < at0.size(); ++i) {
    CHECK(at0.color_of(i) == Color::White);
    CHECK(at1.color_of(i) == Color::Black);  // u < 1 always
  }
  const double grid[] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  for (std::size_t a = 0; a + 1 < std::size(grid); ++a) {
    const ColorView lo = recolor_threshold(cfg, grid[a]);
    const ColorView hi = recolor_threshold(cfg, grid[a + 1]);
    for (std::uint32_t i = 0; i < lo.size(); ++i) {
      if (lo.color_of(i) == Color::Black) CHECK(hi.color_of(i) == Color::Black);
    }
  }
  CHECK_THROWS_AS(recolor_threshold(cfg, -0.1), ConfigError);
  CHECK_THROWS_AS(recolor_threshold(cfg, 1.1), ConfigError);
}
