#pragma once

#include <cstdint>
#include <vector>

namespace confetti {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

// Two-sided 95% by default (z is the normal quantile, not a config knob in
// the tools; exposed for tests).
Interval wilson_interval(long successes, long trials,
                         double z = 1.959963984540054);

// One (parameter value, bernoulli tally) cell of a sweep.
struct BinomPoint {
  double p = 0.0;
  long successes = 0;
  long trials = 0;
};

// P(success at p) = 1 / (1 + exp(-(beta0 + beta1 p))).
struct LogisticFit {
  double beta0 = 0.0;
  double beta1 = 0.0;
  bool converged = false;
  double predict(double p) const;
  // Parameter value where the fitted curve passes `level`; NaN when the
  // slope is too flat to invert.
  double crossing(double level = 0.5) const;
};

// Iteratively reweighted least squares on the binomial log-likelihood.
// Needs at least two distinct p values; separation is tolerated (the slope
// saturates and `converged` stays false, but crossing() remains inside the
// data gap).
LogisticFit fit_logistic(const std::vector<BinomPoint>& pts,
                         int max_iter = 100);

// Parametric bootstrap for the level-1/2 crossing of the logistic fit:
// resample each tally from Binomial(trials_i, fitted_i), refit, take the
// [2.5%, 97.5%] percentiles of the crossing. NaN bounds when no resample
// produced a usable fit.
Interval bootstrap_crossing_ci(const std::vector<BinomPoint>& pts,
                               int resamples, std::uint64_t seed);

}  // namespace confetti
