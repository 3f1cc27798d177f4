#include "confetti/threshold.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>

#include "confetti/parallel.hpp"

namespace confetti {

namespace {

std::size_t table_words(int n) {
  return ((std::size_t{1} << n) + 63) / 64;
}

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

double weight_of(std::uint32_t x, const std::vector<double>& p) {
  double w = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    w *= (x >> i) & 1 ? p[i] : 1.0 - p[i];
  return w;
}

// d/dp_i of P[f=1], valid for arbitrary f (signed for non-monotone ones).
double signed_derivative(const MonotoneBooleanFunction& f,
                         const ProductMeasure& mu, int i) {
  if (i < 0 || i >= f.n()) throw InvariantError("variable index out of range");
  const auto& p = mu.p();
  std::uint32_t bit = 1u << i;
  Kahan acc;
  for (std::uint32_t x = 0; x < f.points(); ++x) {
    if (x & bit) continue;
    int diff = int(f.eval(x | bit)) - int(f.eval(x));
    if (diff == 0) continue;
    double w = 1.0;
    for (int j = 0; j < f.n(); ++j) {
      if (j == i) continue;
      w *= (x >> j) & 1 ? p[j] : 1.0 - p[j];
    }
    acc.add(diff * w);
  }
  return acc.sum;
}

}  // namespace

MonotoneBooleanFunction::MonotoneBooleanFunction(int n,
                                                 std::vector<std::uint64_t> table)
    : n_(n), table_(std::move(table)) {
  if (n < 1 || n > kMaxVars)
    throw InvariantError("boolean function arity must be in [1,24]");
  if (table_.size() != table_words(n))
    throw InvariantError("truth table has wrong length");
  // canonicalize: padding bits above 2^n stay zero, so equal functions have
  // equal tables
  const std::uint32_t used = points() & 63u;
  if (used) table_.back() &= (1ull << used) - 1;
}

MonotoneBooleanFunction MonotoneBooleanFunction::constant(int n, bool value) {
  std::vector<std::uint64_t> t(table_words(n), value ? ~0ull : 0ull);
  return MonotoneBooleanFunction(n, std::move(t));
}

MonotoneBooleanFunction MonotoneBooleanFunction::dictator(int n, int var) {
  if (var < 0 || var >= n) throw InvariantError("dictator variable out of range");
  std::vector<std::uint64_t> t(table_words(n), 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x)
    if ((x >> var) & 1) t[x >> 6] |= 1ull << (x & 63);
  return MonotoneBooleanFunction(n, std::move(t));
}

MonotoneBooleanFunction MonotoneBooleanFunction::or_all(int n) {
  std::vector<std::uint64_t> t(table_words(n), ~0ull);
  t[0] &= ~1ull;  // f(0) = 0
  return MonotoneBooleanFunction(n, std::move(t));
}

MonotoneBooleanFunction MonotoneBooleanFunction::and_all(int n) {
  std::vector<std::uint64_t> t(table_words(n), 0);
  std::uint32_t ones = (1u << n) - 1;
  t[ones >> 6] |= 1ull << (ones & 63);
  return MonotoneBooleanFunction(n, std::move(t));
}

MonotoneBooleanFunction MonotoneBooleanFunction::majority(int n) {
  if (n % 2 == 0) throw InvariantError("majority needs odd arity");
  std::vector<std::uint64_t> t(table_words(n), 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x)
    if (std::popcount(x) * 2 > n) t[x >> 6] |= 1ull << (x & 63);
  return MonotoneBooleanFunction(n, std::move(t));
}

MonotoneBooleanFunction MonotoneBooleanFunction::parity(int n) {
  std::vector<std::uint64_t> t(table_words(n), 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x)
    if (std::popcount(x) & 1) t[x >> 6] |= 1ull << (x & 63);
  return MonotoneBooleanFunction(n, std::move(t));
}

bool MonotoneBooleanFunction::is_upset() const {
  if (upset_cache_ < 0) {
    // f is an up-set iff no 1-point has a 0-point directly above it.
    bool ok = true;
    for (std::uint32_t x = 0; x < points() && ok; ++x) {
      if (!eval(x)) continue;
      for (int i = 0; i < n_; ++i) {
        std::uint32_t bit = 1u << i;
        if (!(x & bit) && !eval(x | bit)) {
          ok = false;
          break;
        }
      }
    }
    upset_cache_ = ok ? 1 : 0;
  }
  return upset_cache_ == 1;
}

ProductMeasure::ProductMeasure(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw InvariantError("product measure needs >= 1 coordinate");
  for (double v : p_)
    if (!(v > 0.0 && v < 1.0))
      throw InvariantError("product measure needs p_i strictly inside (0,1)");
}

double prob(const MonotoneBooleanFunction& f, const ProductMeasure& mu) {
  if (mu.n() != f.n()) throw InvariantError("measure arity mismatch");
  const auto& p = mu.p();
  Kahan acc;
  for (std::uint32_t x = 0; x < f.points(); ++x)
    if (f.eval(x)) acc.add(weight_of(x, p));
  return acc.sum;
}

double pivotal_derivative(const MonotoneBooleanFunction& f,
                          const ProductMeasure& mu, int i) {
  if (mu.n() != f.n()) throw InvariantError("measure arity mismatch");
  if (!f.is_upset())
    throw InvariantError("pivotal derivative requires a monotone function");
  return signed_derivative(f, mu, i);
}

double total_influence(const MonotoneBooleanFunction& f,
                       const ProductMeasure& mu) {
  if (mu.n() != f.n()) throw InvariantError("measure arity mismatch");
  const auto& p = mu.p();
  Kahan acc;
  for (int i = 0; i < f.n(); ++i) {
    std::uint32_t bit = 1u << i;
    // P[i pivotal] summed over the other coordinates.
    Kahan piv;
    for (std::uint32_t x = 0; x < f.points(); ++x) {
      if (x & bit) continue;
      if (f.eval(x) == f.eval(x | bit)) continue;
      double w = 1.0;
      for (int j = 0; j < f.n(); ++j) {
        if (j == i) continue;
        w *= (x >> j) & 1 ? p[j] : 1.0 - p[j];
      }
      piv.add(w);
    }
    // resampling i changes the bit with probability 2 p_i (1-p_i)
    acc.add(2.0 * p[i] * (1.0 - p[i]) * piv.sum);
  }
  return acc.sum;
}

std::pair<double, double> influence_identity_check(
    const MonotoneBooleanFunction& f, const ProductMeasure& mu) {
  if (mu.n() != f.n()) throw InvariantError("measure arity mismatch");
  const auto& p = mu.p();
  Kahan rhs;
  for (int i = 0; i < f.n(); ++i)
    rhs.add(2.0 * p[i] * (1.0 - p[i]) * signed_derivative(f, mu, i));
  return {total_influence(f, mu), rhs.sum};
}

BoosterScan find_boosters(const MonotoneBooleanFunction& f,
                          const ProductMeasure& mu, int max_set, double tau,
                          int workers) {
  if (mu.n() != f.n()) throw InvariantError("measure arity mismatch");
  if (max_set < 1 || max_set > f.n())
    throw InvariantError("booster set size must be in [1,n]");
  const int n = f.n();
  const auto& p = mu.p();

  std::vector<double> weights(f.points());
  for (std::uint32_t x = 0; x < f.points(); ++x) weights[x] = weight_of(x, p);

  BoosterScan out;
  out.base_prob = prob(f, mu);

  // All variable subsets of size 1..max_set, in lexicographic mask order so
  // the report ordering is stable.
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    if (std::popcount(mask) <= max_set) subsets.push_back(mask);

  struct SubsetResult {
    std::vector<Booster> hits;
    std::optional<Booster> ones, zeros;
  };
  std::vector<SubsetResult> results(subsets.size());

  parallel_for(subsets.size(), workers, [&](std::size_t si) {
    std::uint32_t mask = subsets[si];
    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) vars.push_back(i);
    const int m = static_cast<int>(vars.size());

    // num[z] = P[f=1, X_T = z]; the denominator P[X_T = z] is closed-form.
    std::vector<double> num(std::size_t{1} << m, 0.0);
    for (std::uint32_t x = 0; x < f.points(); ++x) {
      if (!f.eval(x)) continue;
      std::uint32_t z = 0;
      for (int b = 0; b < m; ++b) z |= ((x >> vars[b]) & 1u) << b;
      num[z] += weights[x];
    }

    SubsetResult& r = results[si];
    for (std::uint32_t z = 0; z < (1u << m); ++z) {
      double den = 1.0;
      for (int b = 0; b < m; ++b)
        den *= (z >> b) & 1 ? p[vars[b]] : 1.0 - p[vars[b]];
      double cond = num[z] / den;
      Booster cand{vars, z, cond, cond - out.base_prob};
      // tau >= 0 keeps shifts of at least tau in either direction; tau < 0
      // keeps only conditionals at or below base + tau.
      bool hit = tau >= 0.0 ? (cond >= out.base_prob + tau ||
                               cond <= out.base_prob - tau)
                            : cond <= out.base_prob + tau;
      if (hit) r.hits.push_back(cand);
      if (z == (1u << m) - 1 &&
          (!r.ones || cand.conditional > r.ones->conditional))
        r.ones = cand;
      if (z == 0 && (!r.zeros || cand.conditional < r.zeros->conditional))
        r.zeros = cand;
    }
  });

  for (auto& r : results) {
    for (auto& b : r.hits) out.boosters.push_back(std::move(b));
    if (r.ones && (!out.best_all_ones ||
                   r.ones->conditional > out.best_all_ones->conditional))
      out.best_all_ones = r.ones;
    if (r.zeros && (!out.best_all_zeros ||
                    r.zeros->conditional < out.best_all_zeros->conditional))
      out.best_all_zeros = r.zeros;
  }
  return out;
}

MonotoneBooleanFunction power_product(const MonotoneBooleanFunction& f,
                                      int copies) {
  if (copies < 1) throw InvariantError("need at least one copy");
  long total = static_cast<long>(copies) * f.n();
  if (total > MonotoneBooleanFunction::kMaxVars)
    throw InvariantError("powered function exceeds 24 variables");
  int ng = static_cast<int>(total);
  std::uint32_t block_mask = (1u << f.n()) - 1;
  std::vector<std::uint64_t> t(table_words(ng), 0);
  for (std::uint32_t x = 0; x < (1u << ng); ++x) {
    bool all = true;
    for (int b = 0; b < copies && all; ++b)
      all = f.eval((x >> (b * f.n())) & block_mask);
    if (all) t[x >> 6] |= 1ull << (x & 63);
  }
  return MonotoneBooleanFunction(ng, std::move(t));
}

bool up_set_check(const MonotoneBooleanFunction& f) { return f.is_upset(); }

Rational prob_exact(const MonotoneBooleanFunction& f,
                    const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != f.n())
    throw InvariantError("measure arity mismatch");
  for (const auto& v : p)
    if (v < 0 || v > 1) throw InvariantError("probabilities must lie in [0,1]");
  Rational sum = 0;
  for (std::uint32_t x = 0; x < f.points(); ++x) {
    if (!f.eval(x)) continue;
    Rational w = 1;
    for (int i = 0; i < f.n(); ++i) w *= (x >> i) & 1 ? p[i] : 1 - p[i];
    sum += w;
  }
  return sum;
}

}  // namespace confetti
