#pragma once

#include <iosfwd>
#include <vector>

#include "tqlab/cadlag_path.hpp"
#include "tqlab/models.hpp"

namespace tqlab {

// One simulated system: n potential customers, the arrival times that landed
// inside the simulation window (sorted), and a single i.i.d. service sequence.
// Customer i in arrival order consumes service_times[i]; the same sequence
// also feeds the rescaled renewal process, which may need draws beyond the
// customer count, so service_times is pre-extended far enough to cover
// renewal demand up to n * horizon.
struct QueueRealization {
  long long n = 0;
  double horizon = 0.0;             // unscaled time window
  std::vector<double> arrival_times;  // sorted, all within [0, horizon]
  std::vector<double> service_times;  // generation order; length >= arrivals
};

// All n arrivals kept; the horizon is set past the last departure so the
// whole drain is visible. Used by the small-system identity checks.
QueueRealization make_full_realization(const ArrivalModel& arrival, const ServiceModel& service,
                                       long long n, Rng& rng);

// Only arrivals inside [0, horizon] are materialized (n uniforms are always
// consumed, so the draw count does not depend on the window). Per-replication
// cost is governed by the window, not by n.
QueueRealization make_windowed_realization(const ArrivalModel& arrival,
                                           const ServiceModel& service, long long n,
                                           double horizon, Rng& rng);

// A^n: unit jump at each arrival time.
CadlagPath arrival_counting(const QueueRealization& r);

// S^n(t) = max{m >= 0 : S_1 + ... + S_m <= n t}; unit jumps at the rescaled
// renewal epochs. The empty-set convention gives S^n(t) = 0 before the first
// epoch. Throws if the pre-drawn service pool cannot cover t_max.
CadlagPath renewal_counting(const QueueRealization& r, double t_max);
inline CadlagPath renewal_counting(const QueueRealization& r) {
  return renewal_counting(r, r.horizon);
}

// C^n: cumulative work input, jump S_i/n at the i-th arrival.
CadlagPath cumulative_input(const QueueRealization& r);

// N^n = C^n - t.
CadlagPath netput(const CadlagPath& cumulative);

struct BusyIdle {
  CadlagPath busy;  // B^n, nondecreasing, slopes in {0, 1}
  CadlagPath idle;  // I^n = psi(N^n), nondecreasing
};

// B^n(t) = t - psi(N^n)(t); I^n = psi(N^n).
BusyIdle busy_idle(const CadlagPath& netput_path);

// L^n = phi(N^n).
CadlagPath workload(const CadlagPath& netput_path);

// Q^n = A^n - S^n(B^n(.)); service_composed = compose(renewal, busy).
CadlagPath queue_length(const CadlagPath& arrivals, const CadlagPath& service_composed);

// Independent event-driven construction of Q^n via the FCFS departure
// recursion D_i = max(T_(i), D_{i-1}) + S_i/n; never touches the reflection
// machinery.
CadlagPath queue_length_oracle(const QueueRealization& r);

// FCFS departure times for the materialized arrivals.
std::vector<double> departure_times(const QueueRealization& r);

// X^n = A^n - S^n(B^n(.)) + B^n/E[S] - f_T(0) t; satisfies Q^n = phi(X^n).
CadlagPath free_process(const CadlagPath& arrivals, const CadlagPath& service_composed,
                        const CadlagPath& busy, double density_at_zero, double mean_service);

// W^n = C^n - B^n, the virtual waiting time; coincides with the workload.
CadlagPath virtual_wait(const CadlagPath& cumulative, const CadlagPath& busy);

// n^{value_exponent} * path(t * n^{-1/3}) on the scaled time axis; exponent
// -1/3 for the diffusion-scaled queue length, -2/3 for fluid counting
// processes, +1/3 for the scaled busy time / cumulative input, +2/3 for the
// scaled virtual wait. If scaled_horizon > 0 the result is cut there and the
// request must fit inside the path's domain.
CadlagPath diffusion_scale(const CadlagPath& path, long long n, double value_exponent,
                           double scaled_horizon = 0.0);

// Number of grid points per unit of scaled time used to discretize the smooth
// centering terms below; their breakpoints are superimposed on the jumps.
inline constexpr int kCenteringGridPerUnit = 512;

// n^{2/3} (A^n(t n^{-1/3})/n - F_T(t n^{-1/3})): the diffusion-scaled centered
// empirical process of the arrival times.
CadlagPath centered_arrival(const CadlagPath& arrivals, const ArrivalModel& model, long long n);

// n^{2/3} (S^n(t n^{-1/3})/n - t n^{-1/3} / E[S]): centered renewal process
// (the centering line is exact, no grid needed).
CadlagPath centered_service(const CadlagPath& renewal, const ServiceModel& model, long long n);

// Deterministic drift term n^{2/3} (F_T(t n^{-1/3}) - f_T(0) t n^{-1/3}) on a
// uniform grid over [0, scaled_horizon].
CadlagPath drift_curve(const ArrivalModel& model, long long n, double scaled_horizon);

// Audit dump `i,T_i,S_i,D_i` of a realization.
void write_realization_csv(const QueueRealization& r, std::ostream& out);

}  // namespace tqlab
