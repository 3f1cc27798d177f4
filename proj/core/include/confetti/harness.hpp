#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "confetti/crossing.hpp"
#include "confetti/discretize.hpp"
#include "confetti/model.hpp"
#include "confetti/shape.hpp"
#include "confetti/stats.hpp"

namespace confetti {

// Proportion estimate with a 95% Wilson interval.
struct Estimate {
  double phat = 0.0;
  long n_trials = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  static Estimate from_tally(long successes, long trials);
};

// Geometry and sampling knobs shared by the crossing estimators. The
// crossing rectangle is (aspect*s) x s; "horizontal" means crossing the long
// way when aspect > 1.
struct CrossingScene {
  ConfettiShape shape = ConfettiShape::unit_disk();
  double lambda_total = 2.0;
  double s = 20.0;
  double aspect = 3.0;
  double pitch = 0.05;
  int workers = 1;
  bool assert_duality = false;

  Rect rect() const { return Rect{0.0, 0.0, aspect * s, s}; }
  Rect square_rect() const { return Rect{0.0, 0.0, s, s}; }
  void validate() const;
};

// One trial's four crossing indicators at one threshold.
struct SweepCell {
  bool black_h = false, black_v = false, white_h = false, white_v = false;
};

// Full per-trial record of a coupled sweep. All thresholds of a trial are
// evaluated on one sampled configuration (shared colour marks), which makes
// the indicator monotonicity in the sweep parameter structural; it is still
// enforced as a hard assertion on every trial.
struct SweepTable {
  std::vector<double> params;        // thresholds p (derived from t for paths)
  std::vector<double> t_values;      // empty for plain p sweeps
  std::vector<std::uint64_t> trial_seeds;
  std::vector<SweepCell> cells;      // trial-major: cells[trial*params.size()+j]
  std::vector<long> successes;       // per param: black crossings, long way
  std::vector<Estimate> estimates;   // per param, same event

  const SweepCell& cell(long trial, std::size_t j) const {
    return cells[static_cast<std::size_t>(trial) * params.size() + j];
  }
};

// Fraction of trials with a black crossing the long way at threshold p.
// Deterministic given the seed; trials run in parallel on derived seeds.
Estimate estimate_crossing_prob(const CrossingScene& scene, double p,
                                long trials, std::uint64_t seed);

// Sweep over ascending thresholds, all evaluated on shared configurations.
SweepTable coupled_sweep(const CrossingScene& scene,
                         const std::vector<double>& p_values, long trials,
                         std::uint64_t seed);

// Robust (cube-level-k) crossing probability along the interpolation path
// t -> (lambda_black(t), lambda_white(t)) at total intensity 2: one
// configuration per trial, thresholded at p(t) = lambda_black(t)/2. The
// crossing rectangle is centered so it fits the level-k box; requires
// aspect*s/2 + shape diameter <= k. Probe pitch is the cube side.
SweepTable interpolation_sweep(const CrossingScene& scene,
                               const std::vector<double>& t_values,
                               double p_target, int k, long trials,
                               std::uint64_t seed);

// Single-threshold robust crossing estimate, trial-for-trial comparable to
// interpolation_sweep at the same seed.
Estimate estimate_robust_crossing(const CrossingScene& scene, double p, int k,
                                  long trials, std::uint64_t seed);

struct PcOptions {
  long trials_per_point = 1000;
  double tolerance = 0.005;  // final bracket width; must be >= 0.005
  double bracket_lo = 0.3;
  double bracket_hi = 0.7;
  int bootstrap_resamples = 1000;
  int workers = 1;
};

struct PcResult {
  double pc_hat = 0.0;
  Interval ci;
  std::vector<BinomPoint> evaluations;  // every (p, tally) the search visited
  LogisticFit fit;
  bool fit_used = false;  // false: fit rejected, bracket midpoint reported
};

// Bisection on p against target 1/2 followed by a logistic-fit refinement
// over all visited points and a parametric bootstrap for the CI.
// count_successes(p, trials, seed) must be deterministic in its arguments.
using SuccessCounter =
    std::function<long(double p, long trials, std::uint64_t seed)>;
PcResult estimate_pc_with(const SuccessCounter& count_successes,
                          const PcOptions& options, std::uint64_t seed);

// Same search driven by square-crossing Monte Carlo trials (the self-dual
// event) on the scene's s and pitch. Trials alternate the 8- and 4-connected
// readings of the event, which centres the raster estimator at the continuum
// crossing point.
PcResult estimate_pc(const CrossingScene& scene, const PcOptions& options,
                     std::uint64_t seed);

struct RswRow {
  double s = 0.0;
  long successes = 0;
  Estimate estimate;
  bool above_floor = false;
};

struct RswReport {
  std::vector<RswRow> rows;
  double floor = 0.02;
  bool all_above_floor = false;
};

// Long-way black crossing at p = 1/2 across scales; flags whether every
// estimate clears the floor.
RswReport rsw_check(const CrossingScene& scene,
                    const std::vector<double>& s_values, long trials,
                    std::uint64_t seed, double floor = 0.02);

// Per-trial comparison of robust level-k crossings against the continuum
// crossing of the same configuration, all levels probed on one common raster
// (cube side of the largest k). The orderings
//   robust(k_1) <= ... <= robust(k_last) <= continuum
// are hard-asserted on every trial.
struct SandwichReport {
  std::vector<int> k_values;
  double p = 0.5;
  double side = 4.0;   // crossing square is [-side/2, side/2]^2
  double pitch = 0.0;  // the common probe pitch
  long trials = 0;
  std::vector<std::uint64_t> trial_seeds;
  std::vector<std::uint8_t> robust_ind;     // trial-major [trial][k index]
  std::vector<std::uint8_t> continuum_ind;  // per trial
  std::vector<Estimate> robust_estimates;   // per k
  Estimate continuum_estimate;

  double gap() const {
    return continuum_estimate.phat - robust_estimates.back().phat;
  }
};

SandwichReport discretize_compare(const ConfettiShape& shape,
                                  double lambda_total, double p, double side,
                                  const std::vector<int>& k_values,
                                  long trials, std::uint64_t seed,
                                  int workers = 1);

// Reporting convenience: true iff theta >= threshold (closed comparison).
bool percolation_certificate(double theta, double threshold);

// CLI-level experiment description.
struct ExperimentPlan {
  ConfettiShape shape = ConfettiShape::unit_disk();
  double lambda_total = 2.0;
  double rect_aspect = 3.0;
  std::vector<double> s_values;
  std::vector<double> p_values;
  std::vector<double> t_values;  // at most one of p_values/t_values set
  std::vector<int> k_values;
  long trials = 1;
  double pitch = 0.05;
  std::uint64_t master_seed = 0;
  std::string out_dir;

  void validate() const;  // trials >= 1, grids ascending, positive knobs
};

}  // namespace confetti
