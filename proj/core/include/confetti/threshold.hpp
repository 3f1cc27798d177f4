#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "confetti/errors.hpp"

namespace confetti {

// Boolean functions on n <= 24 bits as explicit truth tables (bit x of the
// table is f(x), variable i living in bit i of x). "Monotone" in the name
// states the intended use; non-monotone tables are representable and the
// operations that need monotonicity check the cached up-set flag.
class MonotoneBooleanFunction {
 public:
  static constexpr int kMaxVars = 24;

  MonotoneBooleanFunction(int n, std::vector<std::uint64_t> table);

  static MonotoneBooleanFunction constant(int n, bool value);
  static MonotoneBooleanFunction dictator(int n, int var);
  static MonotoneBooleanFunction or_all(int n);
  static MonotoneBooleanFunction and_all(int n);
  static MonotoneBooleanFunction majority(int n);  // n odd
  static MonotoneBooleanFunction parity(int n);    // non-monotone, for tests

  int n() const { return n_; }
  std::uint32_t points() const { return 1u << n_; }
  bool eval(std::uint32_t x) const {
    return (table_[x >> 6] >> (x & 63)) & 1;
  }
  const std::vector<std::uint64_t>& table() const { return table_; }

  // Cached up-set check: f(x) <= f(y) whenever x <= y coordinatewise.
  bool is_upset() const;

 private:
  int n_;
  std::vector<std::uint64_t> table_;
  mutable int upset_cache_ = -1;
};

// Independent bits, P(X_i = 1) = p_i, every p_i in (0,1).
class ProductMeasure {
 public:
  explicit ProductMeasure(std::vector<double> p);
  static ProductMeasure uniform(int n) {
    return ProductMeasure(std::vector<double>(n, 0.5));
  }
  int n() const { return static_cast<int>(p_.size()); }
  const std::vector<double>& p() const { return p_; }
  double p(int i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

// P[f(X) = 1] by exact enumeration, Kahan-summed doubles (absolute error of
// order 2^n machine epsilons).
double prob(const MonotoneBooleanFunction& f, const ProductMeasure& mu);

// dP/dp_i for non-decreasing f: equals the probability that coordinate i is
// pivotal, i.e. (1 / (2 p_i (1-p_i))) * P[f(X) != f(X with X_i resampled)].
// Rejects non-monotone f.
double pivotal_derivative(const MonotoneBooleanFunction& f,
                          const ProductMeasure& mu, int i);

// Total influence I(f) = sum_i P[f(X) != f(X with X_i resampled)], defined
// for arbitrary f.
double total_influence(const MonotoneBooleanFunction& f,
                       const ProductMeasure& mu);

// Returns (I(f), 2 sum_i p_i (1-p_i) dP/dp_i); for monotone f both sides
// agree to enumeration accuracy.
std::pair<double, double> influence_identity_check(
    const MonotoneBooleanFunction& f, const ProductMeasure& mu);

struct Booster {
  std::vector<int> vars;       // conditioned coordinates, ascending
  std::uint32_t assignment;    // bit b is the value forced on vars[b]
  double conditional;          // E[f | X_vars = assignment]
  double boost;                // conditional - E[f]
};

struct BoosterScan {
  double base_prob = 0.0;
  std::vector<Booster> boosters;
  // For monotone f: the strongest all-ones and all-zeros conditionings seen
  // (the two canonical forms through which small sets shift the mean).
  std::optional<Booster> best_all_ones;
  std::optional<Booster> best_all_zeros;
};

// Enumerates conditionings (T, z) with 1 <= |T| <= max_set. With tau >= 0
// reports those whose conditional shifts the mean by at least tau in either
// direction; with tau < 0 only those with conditional <= E[f] + tau.
// Feasible for n <= 20, max_set <= 4.
BoosterScan find_boosters(const MonotoneBooleanFunction& f,
                          const ProductMeasure& mu, int max_set, double tau,
                          int workers = 0);

// g on copies*n variables: product of f over disjoint blocks, so
// E[g] = E[f]^copies under the replicated measure. copies*n <= 24.
MonotoneBooleanFunction power_product(const MonotoneBooleanFunction& f,
                                      int copies);

// Recomputes (and caches) the up-set flag.
bool up_set_check(const MonotoneBooleanFunction& f);

// Exact rational mode for identities claimed exact.
using Rational = boost::multiprecision::cpp_rational;
Rational prob_exact(const MonotoneBooleanFunction& f,
                    const std::vector<Rational>& p);

}  // namespace confetti
