#pragma once

#include <string>
#include <vector>

#include "tqlab/rng.hpp"

namespace tqlab {

// Arrival-time distribution families. Each exposes the distribution function
// and the two constants that drive the diffusion limit: the density at zero
// (instantaneous arrival rate per customer) and its slope at zero (curvature
// of the drift). The density is maximal at zero for every supported family.
class ArrivalModel {
 public:
  enum class Family { Exponential, Uniform, TriangularDecreasing };

  static ArrivalModel exponential(double rate);
  static ArrivalModel uniform(double b);                // uniform on (0, b)
  static ArrivalModel triangular_decreasing(double b);  // density 2(b-t)/b^2 on [0, b]

  // Spec string `family:param[,param]`, e.g. "exp:1.0", "unif:0,2", "tri:0,2".
  static ArrivalModel parse(const std::string& spec);

  Family family() const { return family_; }
  double cdf(double t) const;
  double quantile(double u) const;  // inverse CDF, u in [0, 1]
  double density_at_zero() const;
  double density_slope_at_zero() const;
  std::string to_string() const;

  double sample(Rng& rng) const { return quantile(rng.uniform01()); }

 private:
  ArrivalModel(Family f, double p) : family_(f), param_(p) {}
  Family family_;
  double param_;  // rate for exponential, b otherwise
};

// Service-time distribution families with the first two moments in closed form.
class ServiceModel {
 public:
  enum class Family { Exponential, Deterministic, Gamma, Uniform };

  static ServiceModel exponential(double rate);
  static ServiceModel deterministic(double c);
  static ServiceModel gamma(double shape, double scale);
  static ServiceModel uniform(double a, double b);

  // "exp:1.0", "det:2", "gamma:2,0.5", "unif:0.5,1.5".
  static ServiceModel parse(const std::string& spec);

  Family family() const { return family_; }
  double mean() const;
  double second_moment() const;
  double variance() const { return second_moment() - mean() * mean(); }
  std::string to_string() const;

  double sample(Rng& rng) const;

 private:
  ServiceModel(Family f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}
  Family family_;
  double p1_, p2_;
};

// E[S] * f_T(0) - 1; zero means the critical load condition holds exactly.
double heavy_traffic_gap(const ArrivalModel& arrival, const ServiceModel& service);

// n i.i.d. arrival times, sorted ascending. Deterministic given the stream.
std::vector<double> sample_arrival_times(const ArrivalModel& a, long long n, Rng& rng);

// Same draw but only the times inside [0, horizon] are materialized; exactly
// n uniforms are consumed either way, so the stream position is independent
// of the window.
std::vector<double> sample_arrival_times_within(const ArrivalModel& a, long long n, double horizon,
                                                Rng& rng);

// m i.i.d. service times in generation order (the order matters for FCFS).
std::vector<double> sample_service_times(const ServiceModel& s, long long m, Rng& rng);

}  // namespace tqlab
