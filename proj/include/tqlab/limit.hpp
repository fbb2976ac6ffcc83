#pragma once

#include <iosfwd>
#include <vector>

#include "tqlab/models.hpp"
#include "tqlab/rng.hpp"

namespace tqlab {

// Coefficients of the limiting free diffusion
//   X(t) = sqrt(f0) W1(t) - (sqrt(varS)/meanS^{3/2}) W2(t) + (f0p/2) t^2,
// with W1, W2 independent standard Brownian motions. Under critical load
// meanS * f0 = 1 and f0p <= 0, so the quadratic drift points down.
struct LimitParams {
  double f0 = 1.0;    // arrival density at zero
  double f0p = 0.0;   // its slope at zero (<= 0)
  double meanS = 1.0; // mean service time
  double varS = 0.0;  // service-time variance

  static LimitParams from_models(const ArrivalModel& arrival, const ServiceModel& service);
  void validate() const;
};

// Values on a uniform time grid t_k = k * step.
struct GridPath {
  double step = 0.0;
  std::vector<double> values;

  double horizon() const { return step * static_cast<double>(values.size() - 1); }
  // Linear interpolation between grid points.
  double eval(double t) const;
};

// Samples the free diffusion on [0, T]: exact Gaussian increments for the two
// Brownian sources (the time change B1(f0 t) is realized as sqrt(f0) W1(t)),
// plus the deterministic parabola.
GridPath sample_free_limit(const LimitParams& p, double T, double step, Rng& rng);

// One-sided reflection on the grid via the running minimum.
GridPath reflect_grid(const GridPath& x);

// f0 + varS / meanS^3; under critical load this equals E[S^2]/E[S]^3, the
// variance of the single Brownian motion equivalent in law to the two-source
// noise.
double equivalent_variance(const LimitParams& p);

// sigma_eq * W(t) + (f0p/2) t^2 with sigma_eq^2 = equivalent_variance(p);
// sigma_scale inflates sigma_eq (used as a negative control).
GridPath sample_single_bm_limit(const LimitParams& p, double T, double step, Rng& rng,
                                double sigma_scale = 1.0);

// CSV dump `t,value` of the grid.
void write_grid_csv(const GridPath& g, std::ostream& out);

}  // namespace tqlab
