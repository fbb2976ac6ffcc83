#pragma once

#include <cstdint>
#include <random>

namespace tqlab {

// Deterministic random source used by every sampler in the project.
// A single 64-bit seed fully determines the stream. Substreams for
// parallel replications are derived as seed XOR stream-index, so that
// replication k sees the same draws no matter how many threads run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index) { return Rng(seed ^ index); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); never returns an endpoint, safe for quantile transforms.
  double uniform01_open() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the inverse CDF; deterministic across platforms.
  double normal() { return normal_quantile(uniform01_open()); }

  // Gamma(shape, scale) by Marsaglia-Tsang squeeze.
  double gamma(double shape, double scale);

  std::uint64_t raw() { return gen_(); }

  // Inverse of the standard normal CDF (Wichura's PPND16), |error| ~ 1e-15.
  static double normal_quantile(double p);

 private:
  std::mt19937_64 gen_;
};

// Standard normal CDF.
double normal_cdf(double x);

}  // namespace tqlab
