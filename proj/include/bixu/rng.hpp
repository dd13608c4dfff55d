#ifndef BIXU_RNG_HPP_
#define BIXU_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

#include "bixu/errors.hpp"

namespace bixu {

// splitmix64 finalizer; used to mix seed components.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds (master_seed, stream ids...) into one seed. Replicate-level
/// parallelism derives independent streams this way, so results do not
/// depend on scheduling.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x2545f4914f6cdd1dULL;
  for (std::uint64_t p : parts) h = mix64(h ^ p);
  return h;
}

/// Deterministic generator. mt19937_64 output is fully specified by the
/// standard; all variate transforms below are hand-rolled so that a seed
/// reproduces the same stream on any platform or build (the std::*
/// distribution classes are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal, Box-Muller (one value per two uniforms, no caching).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Poisson by chunked inversion. Exact for any finite mean; chunking keeps
  /// exp(-mu) away from underflow.
  long poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) throw domain_error("poisson: mean must be finite and >= 0");
    long total = 0;
    while (mean > 32.0) {
      total += poisson_inversion(16.0);
      mean -= 16.0;
    }
    return total + poisson_inversion(mean);
  }

  /// Gamma(shape, scale), Marsaglia-Tsang squeeze.
  double gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) throw domain_error("gamma: shape and scale must be > 0");
    if (shape < 1.0) {
      double u = uniform();
      while (u <= 0.0) u = uniform();
      return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double cc = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + cc * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform();
      while (u <= 0.0) u = uniform();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v * scale;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v * scale;
    }
  }

 private:
  long poisson_inversion(double mean) {
    if (mean <= 0.0) return 0;
    const double threshold = std::exp(-mean);
    long k = 0;
    double p = uniform();
    while (p > threshold) {
      ++k;
      p *= uniform();
    }
    return k;
  }

  std::mt19937_64 gen_;
};

}  // namespace bixu

#endif  // BIXU_RNG_HPP_
