#pragma once

#include <iosfwd>
#include <vector>

namespace tqlab {

// Absolute tolerance for time comparisons. Breakpoints coming from input data
// are kept exactly; the tolerance only guards points produced by arithmetic
// (segment crossings, preimages under a time change).
inline constexpr double kTimeTol = 1e-12;

// Piecewise-linear right-continuous path on [0, horizon].
//
// Segment i runs from times[i] to times[i+1] (or to horizon for the last one)
// with value values[i] + slopes[i] * (t - times[i]). A jump at times[i] is the
// difference between values[i] and the left limit of segment i-1. Every
// counting, workload and diffusion process in the project lives in this one
// representation, so the reflection and composition below are exact.
class CadlagPath {
 public:
  CadlagPath(std::vector<double> times, std::vector<double> values, std::vector<double> slopes,
             double horizon);

  // A constant path.
  static CadlagPath constant(double value, double horizon);
  // value0 + slope * t.
  static CadlagPath line(double value0, double slope, double horizon);
  // Pure step path: initial value plus jumps of size deltas[k] at jump_times[k]
  // (sorted ascending, within [0, horizon]; coincident times accumulate).
  static CadlagPath step(const std::vector<double>& jump_times, const std::vector<double>& deltas,
                         double horizon, double initial = 0.0);
  // Continuous piecewise-linear interpolation through (sample_times, sample_values);
  // sample_times strictly increasing, first is 0; horizon = last sample time.
  static CadlagPath interpolate(const std::vector<double>& sample_times,
                                const std::vector<double>& sample_values);

  // Right-continuous value at t in [0, horizon].
  double eval(double t) const;
  // Left limit at t (equals eval for continuity points; f(0-) := f(0)).
  double left_limit(double t) const;

  const std::vector<double>& times() const { return times_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }
  double horizon() const { return horizon_; }
  std::size_t segments() const { return times_.size(); }

  // Index of the segment containing t.
  std::size_t segment_index(double t) const;

 private:
  std::vector<double> times_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  double horizon_;
};

struct Reflection {
  CadlagPath phi;  // reflected path f + psi, >= 0
  CadlagPath psi;  // nondecreasing pushing part sup_{s<=t} max(0, -f(s))
};

// One-sided Skorokhod reflection at zero, computed exactly from the segments:
// the running infimum of a piecewise-linear path moves only at breakpoints or
// inside segments of negative slope, and both cases are handled analytically.
Reflection reflect(const CadlagPath& f);

// t -> outer(inner(t)). inner must be nondecreasing with range inside
// [0, outer.horizon()]. Breakpoints of the result are inner's breakpoints plus
// the exact preimages of outer's breakpoints under inner.
CadlagPath compose(const CadlagPath& outer, const CadlagPath& inner);

// alpha * a + beta * b on the merged breakpoint set, horizon = min of the two.
CadlagPath axpby(double alpha, const CadlagPath& a, double beta, const CadlagPath& b);

inline CadlagPath add(const CadlagPath& a, const CadlagPath& b) { return axpby(1.0, a, 1.0, b); }
inline CadlagPath subtract(const CadlagPath& a, const CadlagPath& b) {
  return axpby(1.0, a, -1.0, b);
}

// c_v * f(c_t * t); time factor c_t > 0, defined on [0, f.horizon()/c_t].
CadlagPath time_value_scale(const CadlagPath& f, double time_factor, double value_factor);

// Restriction of f to [0, T], T <= horizon.
CadlagPath restrict(const CadlagPath& f, double T);

// sup_{t<=T} |a(t) - b(t)| over the merged breakpoints, left limits included.
double sup_diff(const CadlagPath& a, const CadlagPath& b, double T);

// Merged jump/kink times of a and b, clustered with the given time tolerance.
std::vector<double> merged_event_times(const CadlagPath& a, const CadlagPath& b, double time_tol);

// max |a - b| sampled strictly between consecutive event clusters (plus the
// final plateau). For step paths this compares the inter-event levels and is
// insensitive to breakpoint jitter below time_tol.
double sup_diff_between_events(const CadlagPath& a, const CadlagPath& b, double time_tol);

// CSV dump `t,value` at breakpoints plus the supplied evaluation grid.
void write_path_csv(const CadlagPath& f, std::ostream& out, const std::vector<double>& grid);

}  // namespace tqlab
