#pragma once

#include <cstdint>
#include <random>

namespace confetti {

// splitmix64 finalizer; the backbone of all deterministic stream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic child stream: per-trial seeds come from (master, trial index),
// per-slab seeds from (trial seed, slab index). Colliding child streams would
// silently correlate trials, hence the double mix.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x9E3779B97F4A7C15ull));
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

inline double uniform(Engine& eng, double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(eng);
}

inline double uniform01(Engine& eng) { return uniform(eng, 0.0, 1.0); }

inline long long poisson(Engine& eng, double mean) {
  if (mean <= 0.0) return 0;
  return std::poisson_distribution<long long>(mean)(eng);
}

// Poisson(mean) conditioned on >= 1, sampled by inversion over
// P(N = n | N >= 1) = mean^n / (n! (e^mean - 1)). Exact even for tiny means,
// where rejection would almost never terminate.
inline long long positive_poisson(Engine& eng, double mean) {
  const double total = std::expm1(mean);  // sum_{n>=1} mean^n / n!
  double u = uniform01(eng) * total;
  double term = mean;
  double cum = term;
  long long n = 1;
  while (u > cum && n < 1'000'000) {
    ++n;
    term *= mean / static_cast<double>(n);
    cum += term;
  }
  return n;
}

}  // namespace confetti
