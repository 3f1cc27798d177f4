#include "confetti/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "confetti/errors.hpp"
#include "confetti/rng.hpp"

namespace confetti {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double quantile_sorted(const std::vector<double>& v, double alpha) {
  if (v.empty()) return kNaN;
  double h = alpha * (static_cast<double>(v.size()) - 1.0);
  std::size_t i = static_cast<std::size_t>(h);
  if (i + 1 >= v.size()) return v.back();
  double frac = h - static_cast<double>(i);
  return v[i] + frac * (v[i + 1] - v[i]);
}
}  // namespace

Interval wilson_interval(long successes, long trials, double z) {
  if (trials <= 0) throw InvariantError("interval needs trials >= 1");
  if (successes < 0 || successes > trials)
    throw InvariantError("successes outside [0, trials]");
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double LogisticFit::predict(double p) const {
  double eta = beta0 + beta1 * p;
  eta = std::clamp(eta, -500.0, 500.0);
  return 1.0 / (1.0 + std::exp(-eta));
}

double LogisticFit::crossing(double level) const {
  if (!(level > 0.0 && level < 1.0)) return kNaN;
  if (std::abs(beta1) < 1e-12) return kNaN;
  return (std::log(level / (1.0 - level)) - beta0) / beta1;
}

LogisticFit fit_logistic(const std::vector<BinomPoint>& pts, int max_iter) {
  double pmin = kNaN, pmax = kNaN;
  for (const auto& pt : pts) {
    if (pt.trials <= 0 || pt.successes < 0 || pt.successes > pt.trials)
      throw InvariantError("bad tally in logistic fit input");
    pmin = std::isnan(pmin) ? pt.p : std::min(pmin, pt.p);
    pmax = std::isnan(pmax) ? pt.p : std::max(pmax, pt.p);
  }
  if (pts.size() < 2 || !(pmax > pmin))
    throw InvariantError("logistic fit needs >= 2 distinct parameter values");

  LogisticFit fit;
  fit.beta0 = 0.0;
  fit.beta1 = 0.0;
  double prev0 = 0.0, prev1 = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    // Newton step on the log-likelihood: solve (X^T W X) d = X^T (y - mu).
    double a00 = 0, a01 = 0, a11 = 0, g0 = 0, g1 = 0;
    for (const auto& pt : pts) {
      double mu = fit.predict(pt.p);
      double w = static_cast<double>(pt.trials) * mu * (1.0 - mu);
      double r = static_cast<double>(pt.successes) -
                 static_cast<double>(pt.trials) * mu;
      a00 += w;
      a01 += w * pt.p;
      a11 += w * pt.p * pt.p;
      g0 += r;
      g1 += r * pt.p;
    }
    double det = a00 * a11 - a01 * a01;
    if (!(std::abs(det) > 1e-300)) break;  // flat / separated: keep last iterate
    double d0 = (a11 * g0 - a01 * g1) / det;
    double d1 = (a00 * g1 - a01 * g0) / det;
    // Damp huge steps so separation saturates instead of overflowing.
    double norm = std::max(std::abs(d0), std::abs(d1));
    if (norm > 100.0) {
      d0 *= 100.0 / norm;
      d1 *= 100.0 / norm;
    }
    fit.beta0 += d0;
    fit.beta1 += d1;
    if (std::abs(fit.beta0 - prev0) < 1e-10 &&
        std::abs(fit.beta1 - prev1) < 1e-10) {
      fit.converged = true;
      break;
    }
    prev0 = fit.beta0;
    prev1 = fit.beta1;
  }
  return fit;
}

Interval bootstrap_crossing_ci(const std::vector<BinomPoint>& pts,
                               int resamples, std::uint64_t seed) {
  if (resamples < 1) throw InvariantError("bootstrap needs >= 1 resample");
  LogisticFit base = fit_logistic(pts);
  std::vector<double> fitted;
  fitted.reserve(pts.size());
  for (const auto& pt : pts) fitted.push_back(base.predict(pt.p));

  std::vector<double> crossings;
  crossings.reserve(static_cast<std::size_t>(resamples));
  std::vector<BinomPoint> draw = pts;
  for (int r = 0; r < resamples; ++r) {
    Engine eng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::binomial_distribution<long> bin(pts[i].trials, fitted[i]);
      draw[i].successes = bin(eng);
    }
    double c = fit_logistic(draw).crossing();
    if (std::isfinite(c)) crossings.push_back(c);
  }
  if (crossings.empty()) return {kNaN, kNaN};
  std::sort(crossings.begin(), crossings.end());
  return {quantile_sorted(crossings, 0.025), quantile_sorted(crossings, 0.975)};
}

}  // namespace confetti
