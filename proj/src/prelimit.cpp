#include "tqlab/prelimit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace tqlab {

namespace {

void validate(const QueueRealization& r) {
  if (r.n < 0) throw std::invalid_argument("QueueRealization: n must be >= 0");
  if (!(r.horizon > 0.0)) throw std::invalid_argument("QueueRealization: horizon must be > 0");
  if (!std::is_sorted(r.arrival_times.begin(), r.arrival_times.end()))
    throw std::invalid_argument("QueueRealization: arrival times must be sorted");
  if (!r.arrival_times.empty() &&
      (r.arrival_times.front() < 0.0 || r.arrival_times.back() > r.horizon))
    throw std::invalid_argument("QueueRealization: arrivals outside [0, horizon]");
  if (r.service_times.size() < r.arrival_times.size())
    throw std::invalid_argument("QueueRealization: fewer services than arrivals");
}

// Draw services until the renewal partial sums cover n * horizon and every
// materialized customer has one.
void extend_services(std::vector<double>& services, const ServiceModel& model, long long n,
                     double horizon, std::size_t customers, Rng& rng) {
  double sum = 0.0;
  for (double s : services) sum += s;
  const double need = static_cast<double>(n) * horizon;
  while (sum <= need || services.size() < customers) {
    const double s = model.sample(rng);
    services.push_back(s);
    sum += s;
  }
}

}  // namespace

QueueRealization make_full_realization(const ArrivalModel& arrival, const ServiceModel& service,
                                       long long n, Rng& rng) {
  if (n <= 0) throw std::invalid_argument("make_full_realization: n must be >= 1");
  QueueRealization r;
  r.n = n;
  r.arrival_times = sample_arrival_times(arrival, n, rng);
  r.service_times = sample_service_times(service, n, rng);
  double depart = 0.0;
  for (long long i = 0; i < n; ++i) {
    depart = std::max(r.arrival_times[static_cast<std::size_t>(i)], depart) +
             r.service_times[static_cast<std::size_t>(i)] / static_cast<double>(n);
  }
  r.horizon = depart + service.mean();  // the empty tail stays visible
  extend_services(r.service_times, service, n, r.horizon, r.arrival_times.size(), rng);
  validate(r);
  return r;
}

QueueRealization make_windowed_realization(const ArrivalModel& arrival,
                                           const ServiceModel& service, long long n,
                                           double horizon, Rng& rng) {
  if (n <= 0) throw std::invalid_argument("make_windowed_realization: n must be >= 1");
  if (!(horizon > 0.0)) throw std::invalid_argument("make_windowed_realization: horizon <= 0");
  QueueRealization r;
  r.n = n;
  r.horizon = horizon;
  const double p = arrival.cdf(horizon);
  r.arrival_times.reserve(static_cast<std::size_t>(static_cast<double>(n) * p * 1.25) + 16);
  for (long long i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    if (u <= p) r.arrival_times.push_back(arrival.quantile(u));
  }
  std::sort(r.arrival_times.begin(), r.arrival_times.end());
  // guards quantile round-off at the window edge
  for (auto it = r.arrival_times.rbegin(); it != r.arrival_times.rend() && *it > horizon; ++it)
    *it = horizon;
  extend_services(r.service_times, service, n, horizon, r.arrival_times.size(), rng);
  validate(r);
  return r;
}

CadlagPath arrival_counting(const QueueRealization& r) {
  validate(r);
  const std::vector<double> ones(r.arrival_times.size(), 1.0);
  return CadlagPath::step(r.arrival_times, ones, r.horizon);
}

CadlagPath renewal_counting(const QueueRealization& r, double t_max) {
  validate(r);
  if (!(t_max <= r.horizon + 1e-9))
    throw std::invalid_argument("renewal_counting: t_max beyond the realization horizon");
  const double budget = static_cast<double>(r.n) * t_max;
  std::vector<double> epochs;
  double sum = 0.0;
  for (double s : r.service_times) {
    sum += s;
    if (sum > budget) break;
    // division round-off can push the epoch one ulp past t_max
    epochs.push_back(std::min(sum / static_cast<double>(r.n), t_max));
  }
  if (sum <= budget)
    throw std::invalid_argument("renewal_counting: service pool exhausted before t_max");
  const std::vector<double> ones(epochs.size(), 1.0);
  return CadlagPath::step(epochs, ones, t_max);
}

CadlagPath cumulative_input(const QueueRealization& r) {
  validate(r);
  std::vector<double> jumps(r.arrival_times.size());
  for (std::size_t i = 0; i < jumps.size(); ++i)
    jumps[i] = r.service_times[i] / static_cast<double>(r.n);
  return CadlagPath::step(r.arrival_times, jumps, r.horizon);
}

CadlagPath netput(const CadlagPath& cumulative) {
  return axpby(1.0, cumulative, -1.0, CadlagPath::line(0.0, 1.0, cumulative.horizon()));
}

BusyIdle busy_idle(const CadlagPath& netput_path) {
  Reflection refl = reflect(netput_path);
  CadlagPath busy =
      axpby(1.0, CadlagPath::line(0.0, 1.0, netput_path.horizon()), -1.0, refl.psi);
  return BusyIdle{std::move(busy), std::move(refl.psi)};
}

CadlagPath workload(const CadlagPath& netput_path) { return reflect(netput_path).phi; }

CadlagPath queue_length(const CadlagPath& arrivals, const CadlagPath& service_composed) {
  return subtract(arrivals, service_composed);
}

std::vector<double> departure_times(const QueueRealization& r) {
  validate(r);
  std::vector<double> departures(r.arrival_times.size());
  double d = 0.0;
  for (std::size_t i = 0; i < r.arrival_times.size(); ++i) {
    d = std::max(r.arrival_times[i], d) + r.service_times[i] / static_cast<double>(r.n);
    departures[i] = d;
  }
  return departures;
}

CadlagPath queue_length_oracle(const QueueRealization& r) {
  const std::vector<double> departures = departure_times(r);
  std::vector<std::pair<double, double>> events;
  events.reserve(r.arrival_times.size() + departures.size());
  for (double t : r.arrival_times) events.emplace_back(t, 1.0);
  for (double d : departures)
    if (d <= r.horizon) events.emplace_back(d, -1.0);
  std::sort(events.begin(), events.end());
  std::vector<double> ts(events.size()), deltas(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    ts[i] = events[i].first;
    deltas[i] = events[i].second;
  }
  return CadlagPath::step(ts, deltas, r.horizon);
}

CadlagPath free_process(const CadlagPath& arrivals, const CadlagPath& service_composed,
                        const CadlagPath& busy, double density_at_zero, double mean_service) {
  if (!(mean_service > 0.0)) throw std::invalid_argument("free_process: mean service must be > 0");
  CadlagPath q = subtract(arrivals, service_composed);
  CadlagPath centering = axpby(1.0 / mean_service, busy, -1.0,
                               CadlagPath::line(0.0, density_at_zero, busy.horizon()));
  return add(q, centering);
}

CadlagPath virtual_wait(const CadlagPath& cumulative, const CadlagPath& busy) {
  return subtract(cumulative, busy);
}

CadlagPath diffusion_scale(const CadlagPath& path, long long n, double value_exponent,
                           double scaled_horizon) {
  if (n < 1) throw std::invalid_argument("diffusion_scale: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double time_factor = std::pow(nd, -1.0 / 3.0);
  const double value_factor = std::pow(nd, value_exponent);
  CadlagPath scaled = time_value_scale(path, time_factor, value_factor);
  if (scaled_horizon > 0.0) {
    if (scaled_horizon > scaled.horizon() * (1.0 + 1e-12) + 1e-9)
      throw std::domain_error("diffusion_scale: requested horizon exceeds the path domain");
    scaled = restrict(scaled, std::min(scaled_horizon, scaled.horizon()));
  }
  return scaled;
}

namespace {

// Smooth curve t -> value_fn(t) discretized on a uniform grid over
// [0, scaled_horizon] with extra_knots superimposed.
template <typename F>
CadlagPath smooth_curve(double scaled_horizon, const std::vector<double>& extra_knots, F&& value_fn) {
  const int per_unit = kCenteringGridPerUnit;
  const std::size_t grid_n =
      static_cast<std::size_t>(std::ceil(scaled_horizon * per_unit)) + 1;
  std::vector<double> ts;
  ts.reserve(grid_n + extra_knots.size() + 1);
  for (std::size_t k = 0; k < grid_n; ++k)
    ts.push_back(std::min(static_cast<double>(k) / per_unit, scaled_horizon));
  ts.push_back(scaled_horizon);
  for (double t : extra_knots)
    if (t >= 0.0 && t <= scaled_horizon) ts.push_back(t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(),
                       [](double a, double b) { return b - a <= kTimeTol; }),
           ts.end());
  std::vector<double> vs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = value_fn(ts[i]);
  return CadlagPath::interpolate(ts, vs);
}

}  // namespace

CadlagPath centered_arrival(const CadlagPath& arrivals, const ArrivalModel& model, long long n) {
  const double nd = static_cast<double>(n);
  const double n13 = std::pow(nd, 1.0 / 3.0);
  const double n23 = std::pow(nd, 2.0 / 3.0);
  CadlagPath scaled = diffusion_scale(arrivals, n, -1.0 / 3.0);
  CadlagPath centering = smooth_curve(scaled.horizon(), scaled.times(), [&](double t) {
    return n23 * model.cdf(t / n13);
  });
  return subtract(scaled, centering);
}

CadlagPath centered_service(const CadlagPath& renewal, const ServiceModel& model, long long n) {
  const double n13 = std::pow(static_cast<double>(n), 1.0 / 3.0);
  CadlagPath scaled = diffusion_scale(renewal, n, -1.0 / 3.0);
  return axpby(1.0, scaled, -1.0,
               CadlagPath::line(0.0, n13 / model.mean(), scaled.horizon()));
}

CadlagPath drift_curve(const ArrivalModel& model, long long n, double scaled_horizon) {
  const double nd = static_cast<double>(n);
  const double n13 = std::pow(nd, 1.0 / 3.0);
  const double n23 = std::pow(nd, 2.0 / 3.0);
  const double f0 = model.density_at_zero();
  return smooth_curve(scaled_horizon, {}, [&](double t) {
    const double u = t / n13;
    return n23 * (model.cdf(u) - f0 * u);
  });
}

void write_realization_csv(const QueueRealization& r, std::ostream& out) {
  const std::vector<double> departures = departure_times(r);
  out << "i,T_i,S_i,D_i\n";
  char buf[96];
  for (std::size_t i = 0; i < r.arrival_times.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g,%.12g\n", i + 1, r.arrival_times[i],
                  r.service_times[i], departures[i]);
    out << buf;
  }
}

}  // namespace tqlab
