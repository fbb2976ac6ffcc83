#include "tqlab/limit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace tqlab {

LimitParams LimitParams::from_models(const ArrivalModel& arrival, const ServiceModel& service) {
  LimitParams p;
  p.f0 = arrival.density_at_zero();
  p.f0p = arrival.density_slope_at_zero();
  p.meanS = service.mean();
  p.varS = service.variance();
  p.validate();
  return p;
}

void LimitParams::validate() const {
  if (!(f0 > 0.0)) throw std::invalid_argument("LimitParams: f0 must be > 0");
  if (!(meanS > 0.0)) throw std::invalid_argument("LimitParams: meanS must be > 0");
  if (varS < 0.0) throw std::invalid_argument("LimitParams: varS must be >= 0");
  if (f0p > 0.0) throw std::invalid_argument("LimitParams: f0p must be <= 0");
}

double GridPath::eval(double t) const {
  if (values.empty()) throw std::domain_error("GridPath::eval: empty path");
  const double H = horizon();
  if (t < -1e-9 || t > H + 1e-9 + 1e-12 * std::fabs(H))
    throw std::domain_error("GridPath::eval: t outside [0, horizon]");
  t = std::clamp(t, 0.0, H);
  const double x = t / step;
  const std::size_t k = std::min(static_cast<std::size_t>(x), values.size() - 2);
  const double w = x - static_cast<double>(k);
  return values[k] * (1.0 - w) + values[k + 1] * w;
}

namespace {

std::size_t grid_steps(double T, double step) {
  if (!(T > 0.0) || !(step > 0.0))
    throw std::invalid_argument("limit sampler: T and step must be > 0");
  return static_cast<std::size_t>(std::ceil(T / step - 1e-9));
}

}  // namespace

GridPath sample_free_limit(const LimitParams& p, double T, double step, Rng& rng) {
  p.validate();
  const std::size_t K = grid_steps(T, step);
  GridPath g;
  g.step = step;
  g.values.resize(K + 1);
  const double sd1 = std::sqrt(p.f0 * step);
  const double sd2 = std::sqrt(p.varS) / (p.meanS * std::sqrt(p.meanS)) * std::sqrt(step);
  double noise = 0.0;
  g.values[0] = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    noise += sd1 * rng.normal() - sd2 * rng.normal();
    const double t = static_cast<double>(k) * step;
    g.values[k] = noise + 0.5 * p.f0p * t * t;
  }
  return g;
}

GridPath reflect_grid(const GridPath& x) {
  GridPath q;
  q.step = x.step;
  q.values.resize(x.values.size());
  double run_min = 0.0;
  for (std::size_t k = 0; k < x.values.size(); ++k) {
    run_min = std::min(run_min, x.values[k]);
    q.values[k] = x.values[k] - std::min(0.0, run_min);
  }
  return q;
}

double equivalent_variance(const LimitParams& p) {
  return p.f0 + p.varS / (p.meanS * p.meanS * p.meanS);
}

GridPath sample_single_bm_limit(const LimitParams& p, double T, double step, Rng& rng,
                                double sigma_scale) {
  p.validate();
  const std::size_t K = grid_steps(T, step);
  GridPath g;
  g.step = step;
  g.values.resize(K + 1);
  const double sd = sigma_scale * std::sqrt(equivalent_variance(p) * step);
  double noise = 0.0;
  g.values[0] = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    noise += sd * rng.normal();
    const double t = static_cast<double>(k) * step;
    g.values[k] = noise + 0.5 * p.f0p * t * t;
  }
  return g;
}

void write_grid_csv(const GridPath& g, std::ostream& out) {
  out << "t,value\n";
  char buf[64];
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", static_cast<double>(k) * g.step,
                  g.values[k]);
    out << buf;
  }
}

}  // namespace tqlab
