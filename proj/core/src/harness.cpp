#include "confetti/harness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "confetti/parallel.hpp"
#include "confetti/rng.hpp"

namespace confetti {

namespace {

void check_ascending(const std::vector<double>& v, const char* what) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] > v[i])
      throw ConfigError(std::string(what) + " must be sorted ascending");
  }
}

void check_probabilities(const std::vector<double>& v, const char* what) {
  for (double p : v) {
    if (!(p >= 0.0 && p <= 1.0))
      throw ConfigError(std::string(what) + " entries must lie in [0,1]");
  }
}

// Hard coupling check: black indicators may only switch on, white ones only
// off, as the threshold increases along the row.
void assert_monotone_row(const SweepCell* row, std::size_t n, long trial,
                         std::uint64_t trial_seed, const char* sweep_kind) {
  for (std::size_t j = 1; j < n; ++j) {
    const SweepCell& a = row[j - 1];
    const SweepCell& b = row[j];
    const bool bad = (a.black_h && !b.black_h) || (a.black_v && !b.black_v) ||
                     (!a.white_h && b.white_h) || (!a.white_v && b.white_v);
    if (bad) {
      throw InvariantError(std::string("coupling monotonicity violated in ") +
                           sweep_kind + " at trial " + std::to_string(trial) +
                           " (seed " + std::to_string(trial_seed) + "), step " +
                           std::to_string(j));
    }
  }
}

void finalize_table(SweepTable& table, long trials) {
  const std::size_t np = table.params.size();
  table.successes.assign(np, 0);
  for (long i = 0; i < trials; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      if (table.cell(i, j).black_h) ++table.successes[j];
    }
  }
  table.estimates.clear();
  table.estimates.reserve(np);
  for (std::size_t j = 0; j < np; ++j) {
    table.estimates.push_back(Estimate::from_tally(table.successes[j], trials));
  }
}

// Robust-crossing kernel shared by the t-sweep and the single-threshold
// estimator so that equal thresholds give identical indicators trial for
// trial.
SweepTable robust_sweep(const CrossingScene& scene,
                        const std::vector<double>& thresholds,
                        std::vector<double> t_values, int k, long trials,
                        std::uint64_t seed) {
  scene.validate();
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (k < 1 || k > 24) throw ConfigError("cube level k must lie in [1,24]");
  if (thresholds.empty()) throw ConfigError("sweep needs at least one threshold");
  check_ascending(thresholds, "thresholds");
  check_probabilities(thresholds, "thresholds");
  const double half_w = scene.aspect * scene.s / 2.0;
  const double half_h = scene.s / 2.0;
  const double need = std::max(half_w, half_h) + scene.shape.diameter();
  if (need > static_cast<double>(k)) {
    throw ConfigError(
        "crossing rectangle does not fit the level-" + std::to_string(k) +
        " box: need k >= aspect*s/2 + shape diameter = " +
        std::to_string(need));
  }
  const Rect rect{-half_w, -half_h, half_w, half_h};
  const Rect window{-static_cast<double>(k), -static_cast<double>(k),
                    static_cast<double>(k), static_cast<double>(k)};
  const double probe_pitch = std::ldexp(1.0, -k);

  SweepTable table;
  table.params = thresholds;
  table.t_values = std::move(t_values);
  table.trial_seeds.resize(static_cast<std::size_t>(trials));
  table.cells.resize(static_cast<std::size_t>(trials) * thresholds.size());

  parallel_for(static_cast<std::size_t>(trials), scene.workers, [&](std::size_t i) {
    const std::uint64_t ts = derive_seed(seed, i);
    table.trial_seeds[i] = ts;
    Configuration config =
        Configuration::sample(window, scene.shape,
                              ColorParams::from_p(scene.lambda_total, 0.5), ts);
    config.ensure_depth(static_cast<double>(k));
    SweepCell* row = &table.cells[i * thresholds.size()];
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      const CubeGrid cubes(config, thresholds[j], k);
      const RobustGrid robust = robust_raster(cubes, rect, probe_pitch);
      const ColorGrid black = to_color_grid(robust, Color::Black);
      const ColorGrid white = to_color_grid(robust, Color::White);
      row[j].black_h = has_crossing(black, Direction::Horizontal, Color::Black);
      row[j].black_v = has_crossing(black, Direction::Vertical, Color::Black);
      row[j].white_h = has_crossing(white, Direction::Horizontal, Color::White);
      row[j].white_v = has_crossing(white, Direction::Vertical, Color::White);
    }
    assert_monotone_row(row, thresholds.size(), static_cast<long>(i), ts,
                        "robust sweep");
  });

  finalize_table(table, trials);
  return table;
}

}  // namespace

Estimate Estimate::from_tally(long successes, long trials) {
  const Interval w = wilson_interval(successes, trials);
  Estimate e;
  e.phat = static_cast<double>(successes) / static_cast<double>(trials);
  e.n_trials = trials;
  e.ci_low = w.lo;
  e.ci_high = w.hi;
  return e;
}

void CrossingScene::validate() const {
  if (!(lambda_total > 0.0)) throw ConfigError("lambda must be positive");
  if (!(s > 0.0)) throw ConfigError("scale s must be positive");
  if (!(aspect > 0.0)) throw ConfigError("aspect must be positive");
  if (!(pitch > 0.0)) throw ConfigError("pitch must be positive");
  if (workers < 0) throw ConfigError("workers must be >= 0 (0 = auto)");
}

SweepTable coupled_sweep(const CrossingScene& scene,
                         const std::vector<double>& p_values, long trials,
                         std::uint64_t seed) {
  scene.validate();
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (p_values.empty()) throw ConfigError("sweep needs at least one threshold");
  check_ascending(p_values, "p grid");
  check_probabilities(p_values, "p grid");

  const Rect rect = scene.rect();
  SweepTable table;
  table.params = p_values;
  table.trial_seeds.resize(static_cast<std::size_t>(trials));
  table.cells.resize(static_cast<std::size_t>(trials) * p_values.size());

  parallel_for(static_cast<std::size_t>(trials), scene.workers, [&](std::size_t i) {
    const std::uint64_t ts = derive_seed(seed, i);
    table.trial_seeds[i] = ts;
    Configuration config =
        Configuration::sample(rect, scene.shape,
                              ColorParams::from_p(scene.lambda_total, 0.5), ts);
    MarkGrid marks = rasterize_marks(config, rect, scene.pitch);
    SweepCell* row = &table.cells[i * p_values.size()];
    for (std::size_t j = 0; j < p_values.size(); ++j) {
      const ColorGrid grid = threshold_grid(marks, p_values[j]);
      const CrossingResult r = crossing_result(grid);
      if (scene.assert_duality && !pixel_duality_holds(r)) {
        throw InvariantError("pixel duality violated at trial " +
                             std::to_string(i));
      }
      row[j] = SweepCell{r.black_horizontal, r.black_vertical,
                         r.white_horizontal, r.white_vertical};
    }
    assert_monotone_row(row, p_values.size(), static_cast<long>(i), ts,
                        "p sweep");
  });

  finalize_table(table, trials);
  return table;
}

Estimate estimate_crossing_prob(const CrossingScene& scene, double p,
                                long trials, std::uint64_t seed) {
  return coupled_sweep(scene, {p}, trials, seed).estimates.front();
}

SweepTable interpolation_sweep(const CrossingScene& scene,
                               const std::vector<double>& t_values,
                               double p_target, int k, long trials,
                               std::uint64_t seed) {
  if (t_values.empty()) throw ConfigError("sweep needs at least one time");
  check_ascending(t_values, "t grid");
  for (double t : t_values) {
    if (!(t >= 0.0 && t <= 1.0))
      throw ConfigError("path times must lie in [0,1]");
  }
  if (scene.lambda_total != 2.0) {
    throw ConfigError("the interpolation path fixes total intensity 2");
  }
  const InterpolationPath path(p_target);
  std::vector<double> thresholds;
  thresholds.reserve(t_values.size());
  for (double t : t_values) thresholds.push_back(path.threshold(t));
  return robust_sweep(scene, thresholds, t_values, k, trials, seed);
}

Estimate estimate_robust_crossing(const CrossingScene& scene, double p, int k,
                                  long trials, std::uint64_t seed) {
  return robust_sweep(scene, {p}, {}, k, trials, seed).estimates.front();
}

PcResult estimate_pc_with(const SuccessCounter& count_successes,
                          const PcOptions& options, std::uint64_t seed) {
  if (!count_successes) throw ConfigError("missing success counter");
  if (options.trials_per_point < 1)
    throw ConfigError("trials per point must be at least 1");
  if (!(options.tolerance >= 0.005))
    throw ConfigError("bisection tolerance must be at least 0.005");
  if (!(0.0 <= options.bracket_lo && options.bracket_lo < options.bracket_hi &&
        options.bracket_hi <= 1.0))
    throw ConfigError("bisection bracket must satisfy 0 <= lo < hi <= 1");
  if (options.bootstrap_resamples < 1)
    throw ConfigError("bootstrap needs at least one resample");

  PcResult result;
  std::uint64_t index = 0;
  auto eval = [&](double p) {
    const std::uint64_t pseed = derive_seed(seed, index++);
    const long succ = count_successes(p, options.trials_per_point, pseed);
    if (succ < 0 || succ > options.trials_per_point)
      throw InvariantError("success counter returned an impossible tally");
    result.evaluations.push_back(BinomPoint{p, succ, options.trials_per_point});
    return static_cast<double>(succ) /
           static_cast<double>(options.trials_per_point);
  };

  double a = options.bracket_lo, b = options.bracket_hi;
  const double fa = eval(a);
  const double fb = eval(b);
  if (!(fa < 0.5 && fb > 0.5)) {
    throw ConfigError(
        "bracket does not straddle the 1/2 crossing: phat(" +
        std::to_string(a) + ")=" + std::to_string(fa) + ", phat(" +
        std::to_string(b) + ")=" + std::to_string(fb));
  }
  while (b - a > options.tolerance) {
    const double m = (a + b) / 2.0;
    if (eval(m) < 0.5) {
      a = m;
    } else {
      b = m;
    }
  }

  result.pc_hat = (a + b) / 2.0;
  result.fit = fit_logistic(result.evaluations);
  const double c = result.fit.crossing(0.5);
  if (std::isfinite(c) && c >= options.bracket_lo && c <= options.bracket_hi) {
    result.pc_hat = c;
    result.fit_used = true;
  }
  result.ci = bootstrap_crossing_ci(result.evaluations,
                                    options.bootstrap_resamples,
                                    derive_seed(seed, 0x626f6f74ull));  // "boot"
  if (std::isnan(result.ci.lo) || std::isnan(result.ci.hi)) {
    result.ci = Interval{a, b};
  }
  return result;
}

PcResult estimate_pc(const CrossingScene& scene, const PcOptions& options,
                     std::uint64_t seed) {
  CrossingScene square = scene;
  square.aspect = 1.0;  // the self-dual square crossing drives the search
  square.workers = options.workers > 0 ? options.workers : scene.workers;
  square.validate();
  const Rect rect = square.rect();
  // The raster breaks the exact self-duality of the square event: Black's
  // 8-connectivity wins pixel-corner ties, nudging the apparent crossing
  // point below 1/2 (about 0.006 at pitch 0.05, far outside the bootstrap
  // CI). Alternating the 8- and 4-connected readings between trials cancels
  // the bias exactly: the two success probabilities sum to 1 at p = 1/2 by
  // pixel duality and the 90-degree symmetry of the square scene.
  auto counter = [square, rect](double p, long trials, std::uint64_t pseed) {
    std::vector<unsigned char> hits(static_cast<std::size_t>(trials), 0);
    parallel_for(static_cast<std::size_t>(trials), square.workers,
                 [&](std::size_t i) {
                   Configuration config = Configuration::sample(
                       rect, square.shape,
                       ColorParams::from_p(square.lambda_total, 0.5),
                       derive_seed(pseed, i));
                   const MarkGrid marks =
                       rasterize_marks(config, rect, square.pitch);
                   const ColorGrid grid = threshold_grid(marks, p);
                   if (i % 2 == 0) {
                     hits[i] = has_crossing(grid, Direction::Horizontal,
                                            Color::Black);
                   } else {
                     // 4-connected Black reading = White reading of the
                     // colour-swapped grid.
                     ColorGrid swapped(grid.origin(), grid.pitch(),
                                       grid.ncols(), grid.nrows());
                     for (int y = 0; y < grid.nrows(); ++y)
                       for (int x = 0; x < grid.ncols(); ++x)
                         swapped.set(x, y, grid.at(x, y) == Color::Black
                                               ? Color::White
                                               : Color::Black);
                     hits[i] = has_crossing(swapped, Direction::Horizontal,
                                            Color::White);
                   }
                 });
    long total = 0;
    for (unsigned char h : hits) total += h;
    return total;
  };
  return estimate_pc_with(counter, options, seed);
}

RswReport rsw_check(const CrossingScene& scene,
                    const std::vector<double>& s_values, long trials,
                    std::uint64_t seed, double floor) {
  if (s_values.empty()) throw ConfigError("need at least one scale");
  check_ascending(s_values, "s grid");
  for (double s : s_values) {
    if (!(s > 0.0)) throw ConfigError("scales must be positive");
  }
  if (!(floor >= 0.0 && floor < 1.0))
    throw ConfigError("floor must lie in [0,1)");

  RswReport report;
  report.floor = floor;
  report.all_above_floor = true;
  for (std::size_t idx = 0; idx < s_values.size(); ++idx) {
    CrossingScene row_scene = scene;
    row_scene.s = s_values[idx];
    const SweepTable t =
        coupled_sweep(row_scene, {0.5}, trials, derive_seed(seed, idx));
    RswRow row;
    row.s = s_values[idx];
    row.successes = t.successes.front();
    row.estimate = t.estimates.front();
    row.above_floor = row.estimate.phat > floor;
    report.all_above_floor = report.all_above_floor && row.above_floor;
    report.rows.push_back(row);
  }
  return report;
}

SandwichReport discretize_compare(const ConfettiShape& shape,
                                  double lambda_total, double p, double side,
                                  const std::vector<int>& k_values,
                                  long trials, std::uint64_t seed,
                                  int workers) {
  if (k_values.empty()) throw ConfigError("need at least one cube level");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 1 || k_values[i] > 24)
      throw ConfigError("cube levels must lie in [1,24]");
    if (i > 0 && k_values[i - 1] >= k_values[i])
      throw ConfigError("cube levels must be strictly ascending");
  }
  if (!(side > 0.0)) throw ConfigError("side must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0,1]");
  if (!(lambda_total > 0.0)) throw ConfigError("lambda must be positive");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (side / 2.0 > static_cast<double>(k_values.front())) {
    throw ConfigError("rectangle side " + std::to_string(side) +
                      " does not fit the level-" +
                      std::to_string(k_values.front()) + " box");
  }

  const int kmax = k_values.back();
  const double pitch = std::ldexp(1.0, -kmax);  // one common probe raster
  const Rect rect{-side / 2.0, -side / 2.0, side / 2.0, side / 2.0};
  const Rect window{-static_cast<double>(kmax), -static_cast<double>(kmax),
                    static_cast<double>(kmax), static_cast<double>(kmax)};
  const std::size_t nk = k_values.size();

  SandwichReport report;
  report.k_values = k_values;
  report.p = p;
  report.side = side;
  report.pitch = pitch;
  report.trials = trials;
  report.trial_seeds.resize(static_cast<std::size_t>(trials));
  report.robust_ind.assign(static_cast<std::size_t>(trials) * nk, 0);
  report.continuum_ind.assign(static_cast<std::size_t>(trials), 0);

  parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t i) {
    const std::uint64_t ts = derive_seed(seed, i);
    report.trial_seeds[i] = ts;
    Configuration config = Configuration::sample(
        window, shape, ColorParams::from_p(lambda_total, 0.5), ts);
    config.ensure_depth(static_cast<double>(kmax));
    std::uint8_t* row = &report.robust_ind[i * nk];
    for (std::size_t j = 0; j < nk; ++j) {
      const CubeGrid cubes(config, p, k_values[j]);
      const RobustGrid robust = robust_raster(cubes, rect, pitch);
      row[j] = has_crossing(to_color_grid(robust, Color::Black),
                            Direction::Horizontal, Color::Black)
                   ? 1
                   : 0;
    }
    const ColorGrid grid = rasterize(config, p, rect, pitch);
    const std::uint8_t cont =
        has_crossing(grid, Direction::Horizontal, Color::Black) ? 1 : 0;
    report.continuum_ind[i] = cont;
    for (std::size_t j = 0; j + 1 < nk; ++j) {
      if (row[j] > row[j + 1]) {
        throw InvariantError("sandwich violated between levels " +
                             std::to_string(k_values[j]) + " and " +
                             std::to_string(k_values[j + 1]) + " at trial " +
                             std::to_string(i) + " (seed " +
                             std::to_string(ts) + ")");
      }
    }
    if (row[nk - 1] > cont) {
      throw InvariantError(
          "robust crossing exceeded the continuum crossing at trial " +
          std::to_string(i) + " (seed " + std::to_string(ts) + ")");
    }
  });

  report.robust_estimates.reserve(nk);
  for (std::size_t j = 0; j < nk; ++j) {
    long tally = 0;
    for (long i = 0; i < trials; ++i) {
      tally += report.robust_ind[static_cast<std::size_t>(i) * nk + j];
    }
    report.robust_estimates.push_back(Estimate::from_tally(tally, trials));
  }
  long cont_tally = 0;
  for (std::uint8_t v : report.continuum_ind) cont_tally += v;
  report.continuum_estimate = Estimate::from_tally(cont_tally, trials);
  return report;
}

bool percolation_certificate(double theta, double threshold) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw ConfigError("theta must lie in [0,1]");
  if (!(threshold >= 0.0 && threshold <= 1.0))
    throw ConfigError("threshold must lie in [0,1]");
  return theta >= threshold;
}

void ExperimentPlan::validate() const {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (!(pitch > 0.0)) throw ConfigError("pitch must be positive");
  if (!(rect_aspect > 0.0)) throw ConfigError("aspect must be positive");
  if (!(lambda_total > 0.0)) throw ConfigError("lambda must be positive");
  if (!p_values.empty() && !t_values.empty()) {
    throw ConfigError("sweep over either p or t, not both");
  }
  check_ascending(s_values, "s grid");
  check_ascending(p_values, "p grid");
  check_ascending(t_values, "t grid");
  check_probabilities(p_values, "p grid");
  for (double t : t_values) {
    if (!(t >= 0.0 && t <= 1.0))
      throw ConfigError("path times must lie in [0,1]");
  }
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 1 || k_values[i] > 24)
      throw ConfigError("cube levels must lie in [1,24]");
    if (i > 0 && k_values[i - 1] > k_values[i])
      throw ConfigError("k grid must be sorted ascending");
  }
}

}  // namespace confetti
