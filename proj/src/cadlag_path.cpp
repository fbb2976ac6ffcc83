#include "tqlab/cadlag_path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace tqlab {

namespace {

constexpr double kDomainSlack = 1e-9;

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string("CadlagPath: non-finite ") + what);
}

// Appends a breakpoint, collapsing times closer than kTimeTol; the later call
// wins, which keeps right-continuity when a computed point lands on top of an
// existing one.
struct Builder {
  std::vector<double> t, v, s;

  void add(double time, double value, double slope) {
    if (!t.empty() && time <= t.back() + kTimeTol) {
      v.back() = value;
      s.back() = slope;
      return;
    }
    t.push_back(time);
    v.push_back(value);
    s.push_back(slope);
  }

  CadlagPath finish(double horizon) && {
    return CadlagPath(std::move(t), std::move(v), std::move(s), horizon);
  }
};

}  // namespace

CadlagPath::CadlagPath(std::vector<double> times, std::vector<double> values,
                       std::vector<double> slopes, double horizon)
    : times_(std::move(times)), values_(std::move(values)), slopes_(std::move(slopes)),
      horizon_(horizon) {
  if (times_.empty() || times_.size() != values_.size() || times_.size() != slopes_.size())
    throw std::invalid_argument("CadlagPath: inconsistent segment arrays");
  if (times_.front() != 0.0) throw std::invalid_argument("CadlagPath: first breakpoint must be 0");
  if (!(horizon_ >= times_.back()))
    throw std::invalid_argument("CadlagPath: breakpoints must not exceed the horizon");
  check_finite(horizon_, "horizon");
  for (std::size_t i = 0; i < times_.size(); ++i) {
    check_finite(times_[i], "breakpoint");
    check_finite(values_[i], "value");
    check_finite(slopes_[i], "slope");
    if (i > 0 && !(times_[i] > times_[i - 1]))
      throw std::invalid_argument("CadlagPath: breakpoints must be strictly increasing");
  }
}

CadlagPath CadlagPath::constant(double value, double horizon) {
  return CadlagPath({0.0}, {value}, {0.0}, horizon);
}

CadlagPath CadlagPath::line(double value0, double slope, double horizon) {
  return CadlagPath({0.0}, {value0}, {slope}, horizon);
}

CadlagPath CadlagPath::step(const std::vector<double>& jump_times,
                            const std::vector<double>& deltas, double horizon, double initial) {
  if (jump_times.size() != deltas.size())
    throw std::invalid_argument("step: times/deltas size mismatch");
  std::vector<double> t{0.0}, v{initial}, s{0.0};
  double level = initial;
  for (std::size_t i = 0; i < jump_times.size(); ++i) {
    const double u = jump_times[i];
    if (i > 0 && u < jump_times[i - 1]) throw std::invalid_argument("step: times must be sorted");
    if (u > horizon) throw std::invalid_argument("step: jump beyond horizon");
    level += deltas[i];
    if (u <= 0.0) {
      v[0] = level;  // jump at (or folded into) time zero
    } else if (u == t.back()) {
      v.back() = level;  // coincident jump times accumulate
    } else {
      t.push_back(u);
      v.push_back(level);
      s.push_back(0.0);
    }
  }
  return CadlagPath(std::move(t), std::move(v), std::move(s), horizon);
}

CadlagPath CadlagPath::interpolate(const std::vector<double>& sample_times,
                                   const std::vector<double>& sample_values) {
  if (sample_times.size() < 2 || sample_times.size() != sample_values.size())
    throw std::invalid_argument("interpolate: need >= 2 samples");
  const std::size_t m = sample_times.size();
  std::vector<double> t(sample_times.begin(), sample_times.end() - 1);
  std::vector<double> v(sample_values.begin(), sample_values.end() - 1);
  std::vector<double> s(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double dt = sample_times[i + 1] - sample_times[i];
    if (!(dt > 0.0)) throw std::invalid_argument("interpolate: times must be strictly increasing");
    s[i] = (sample_values[i + 1] - sample_values[i]) / dt;
  }
  return CadlagPath(std::move(t), std::move(v), std::move(s), sample_times.back());
}

std::size_t CadlagPath::segment_index(double t) const {
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - times_.begin() - 1));
}

double CadlagPath::eval(double t) const {
  if (t < -kDomainSlack || t > horizon_ + kDomainSlack + 1e-12 * std::fabs(horizon_))
    throw std::domain_error("CadlagPath::eval: t outside [0, horizon]");
  t = std::clamp(t, 0.0, horizon_);
  const std::size_t i = segment_index(t);
  return values_[i] + slopes_[i] * (t - times_[i]);
}

double CadlagPath::left_limit(double t) const {
  if (t <= times_.front()) return values_.front();
  if (t > horizon_ + kDomainSlack + 1e-12 * std::fabs(horizon_))
    throw std::domain_error("CadlagPath::left_limit: t outside [0, horizon]");
  t = std::min(t, horizon_);
  // segment whose closure contains t from the left: last breakpoint strictly < t
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times_.begin()) - 1;
  return values_[i] + slopes_[i] * (t - times_[i]);
}

Reflection reflect(const CadlagPath& f) {
  const auto& T = f.times();
  const auto& V = f.values();
  const auto& S = f.slopes();
  const std::size_t m = T.size();

  // Running minimum path; nonincreasing, cadlag (may jump down with f).
  Builder mb;
  double cur = V[0];
  for (std::size_t i = 0; i < m; ++i) {
    const double a = T[i];
    const double b = (i + 1 < m) ? T[i + 1] : f.horizon();
    cur = std::min(cur, V[i]);
    const double slope = S[i];
    if (slope < 0.0) {
      const double end_left = V[i] + slope * (b - a);
      if (V[i] > cur) {
        const double cross = a + (cur - V[i]) / slope;  // f descends to the running min
        if (cross < b - kTimeTol) {
          mb.add(a, cur, 0.0);
          mb.add(cross, cur, slope);
        } else {
          mb.add(a, cur, 0.0);
        }
      } else {
        mb.add(a, cur, slope);  // min follows f immediately
      }
      cur = std::min(cur, end_left);
    } else {
      mb.add(a, cur, 0.0);
    }
  }
  const CadlagPath run_min = std::move(mb).finish(f.horizon());

  // psi = max(0, -run_min); run_min is nonincreasing so it crosses zero at most once.
  const auto& mt = run_min.times();
  const auto& mv = run_min.values();
  const auto& ms = run_min.slopes();
  Builder pb;
  bool below = false;
  for (std::size_t i = 0; i < mt.size(); ++i) {
    const double a = mt[i];
    const double b = (i + 1 < mt.size()) ? mt[i + 1] : f.horizon();
    if (below) {
      pb.add(a, -mv[i], -ms[i]);
      continue;
    }
    if (mv[i] < 0.0) {
      below = true;  // jumped below zero at a
      pb.add(a, -mv[i], -ms[i]);
      continue;
    }
    const double end_left = mv[i] + ms[i] * (b - a);
    if (ms[i] < 0.0 && end_left < 0.0) {
      const double cross = a + (0.0 - mv[i]) / ms[i];
      pb.add(a, 0.0, 0.0);
      pb.add(cross, 0.0, -ms[i]);
      below = true;
    } else {
      pb.add(a, 0.0, 0.0);
    }
  }
  CadlagPath psi = std::move(pb).finish(f.horizon());
  CadlagPath phi = add(f, psi);
  return Reflection{std::move(phi), std::move(psi)};
}

CadlagPath compose(const CadlagPath& outer, const CadlagPath& inner) {
  const auto& ti = inner.times();
  const auto& vi = inner.values();
  const auto& si = inner.slopes();
  const auto& to = outer.times();
  const auto& vo = outer.values();
  const auto& so = outer.slopes();
  const std::size_t ni = ti.size();
  const std::size_t no = to.size();

  // inner must be nondecreasing (up to rounding noise)
  for (std::size_t i = 0; i < ni; ++i) {
    if (si[i] < -kTimeTol) throw std::invalid_argument("compose: inner has a decreasing segment");
    if (i > 0) {
      const double left = vi[i - 1] + si[i - 1] * (ti[i] - ti[i - 1]);
      if (vi[i] < left - kTimeTol) throw std::invalid_argument("compose: inner jumps downward");
    }
  }
  const double lo = vi.front();
  const double hi = inner.eval(inner.horizon());
  if (lo < -kDomainSlack || hi > outer.horizon() + kDomainSlack + 1e-12 * std::fabs(outer.horizon()))
    throw std::domain_error("compose: inner range escapes outer domain");

  Builder rb;
  std::size_t jo = 0;
  auto advance_to = [&](double y) {
    while (jo + 1 < no && to[jo + 1] <= y) ++jo;
  };
  auto outer_at = [&](double y) { return vo[jo] + so[jo] * (y - to[jo]); };

  for (std::size_t k = 0; k < ni; ++k) {
    const double a = ti[k];
    const double b = (k + 1 < ni) ? ti[k + 1] : inner.horizon();
    const double y0 = std::clamp(vi[k], 0.0, outer.horizon());
    double slope = std::max(si[k], 0.0);
    advance_to(y0);
    rb.add(a, outer_at(y0), so[jo] * slope);
    if (slope > 0.0 && b > a) {
      const double y_end = y0 + slope * (b - a);  // left limit of inner at b
      const bool last = (k + 1 == ni);
      while (jo + 1 < no) {
        const double u = to[jo + 1];
        if (!(u < y_end || (u == y_end && last))) break;
        double tau = a + (u - y0) / slope;
        tau = std::clamp(tau, a, b);
        ++jo;
        rb.add(tau, vo[jo], so[jo] * slope);
        if (u == y_end) break;
      }
    }
  }
  return std::move(rb).finish(inner.horizon());
}

CadlagPath axpby(double alpha, const CadlagPath& a, double beta, const CadlagPath& b) {
  const double H = std::min(a.horizon(), b.horizon());
  const auto& ta = a.times();
  const auto& tb = b.times();
  std::vector<double> t, v, s;
  t.reserve(ta.size() + tb.size());
  v.reserve(ta.size() + tb.size());
  s.reserve(ta.size() + tb.size());
  std::size_t ia = 0, ib = 0, ja = 0, jb = 0;
  while (ia < ta.size() || ib < tb.size()) {
    double u;
    if (ia < ta.size() && (ib == tb.size() || ta[ia] <= tb[ib]))
      u = ta[ia];
    else
      u = tb[ib];
    if (u > H) break;
    while (ia < ta.size() && ta[ia] == u) ++ia;
    while (ib < tb.size() && tb[ib] == u) ++ib;
    // segments of a and b containing u
    while (ja + 1 < ta.size() && ta[ja + 1] <= u) ++ja;
    while (jb + 1 < tb.size() && tb[jb + 1] <= u) ++jb;
    const double va = a.values()[ja] + a.slopes()[ja] * (u - ta[ja]);
    const double vb = b.values()[jb] + b.slopes()[jb] * (u - tb[jb]);
    t.push_back(u);
    v.push_back(alpha * va + beta * vb);
    s.push_back(alpha * a.slopes()[ja] + beta * b.slopes()[jb]);
  }
  return CadlagPath(std::move(t), std::move(v), std::move(s), H);
}

CadlagPath time_value_scale(const CadlagPath& f, double time_factor, double value_factor) {
  if (!(time_factor > 0.0)) throw std::invalid_argument("time_value_scale: time factor must be > 0");
  std::vector<double> t(f.times());
  std::vector<double> v(f.values());
  std::vector<double> s(f.slopes());
  for (auto& x : t) x /= time_factor;
  for (auto& x : v) x *= value_factor;
  for (auto& x : s) x *= value_factor * time_factor;
  return CadlagPath(std::move(t), std::move(v), std::move(s), f.horizon() / time_factor);
}

CadlagPath restrict(const CadlagPath& f, double T) {
  if (T < 0.0 || T > f.horizon() + kDomainSlack + 1e-12 * std::fabs(f.horizon()))
    throw std::domain_error("restrict: T outside [0, horizon]");
  T = std::min(T, f.horizon());
  std::vector<double> t, v, s;
  for (std::size_t i = 0; i < f.times().size() && f.times()[i] <= T; ++i) {
    t.push_back(f.times()[i]);
    v.push_back(f.values()[i]);
    s.push_back(f.slopes()[i]);
  }
  return CadlagPath(std::move(t), std::move(v), std::move(s), T);
}

double sup_diff(const CadlagPath& a, const CadlagPath& b, double T) {
  const double slack = kDomainSlack + 1e-12 * std::fabs(T);
  if (T > a.horizon() + slack || T > b.horizon() + slack)
    throw std::domain_error("sup_diff: T exceeds a horizon");
  T = std::min({T, a.horizon(), b.horizon()});
  const auto& ta = a.times();
  const auto& tb = b.times();
  double best = 0.0;
  std::size_t ia = 0, ib = 0, ja = 0, jb = 0;
  // difference a-b evaluated with explicit segment indices; ja/jb always hold
  // the segments containing the most recently processed time
  auto diff_with = [&](std::size_t sa, std::size_t sb, double u) {
    const double va = a.values()[sa] + a.slopes()[sa] * (u - ta[sa]);
    const double vb = b.values()[sb] + b.slopes()[sb] * (u - tb[sb]);
    return va - vb;
  };
  while (ia < ta.size() || ib < tb.size()) {
    double u;
    if (ia < ta.size() && (ib == tb.size() || ta[ia] <= tb[ib]))
      u = ta[ia];
    else
      u = tb[ib];
    if (u > T) break;
    // left limit at u: previous segments extended up to u (no breakpoints between)
    if (u > 0.0) best = std::max(best, std::fabs(diff_with(ja, jb, u)));
    while (ia < ta.size() && ta[ia] == u) ++ia;
    while (ib < tb.size() && tb[ib] == u) ++ib;
    while (ja + 1 < ta.size() && ta[ja + 1] <= u) ++ja;
    while (jb + 1 < tb.size() && tb[jb + 1] <= u) ++jb;
    best = std::max(best, std::fabs(diff_with(ja, jb, u)));
  }
  // final stretch: value at T (left limit there coincides on the last segment)
  while (ja + 1 < ta.size() && ta[ja + 1] <= T) ++ja;
  while (jb + 1 < tb.size() && tb[jb + 1] <= T) ++jb;
  best = std::max(best, std::fabs(diff_with(ja, jb, T)));
  return best;
}

std::vector<double> merged_event_times(const CadlagPath& a, const CadlagPath& b, double time_tol) {
  std::vector<double> all;
  all.reserve(a.times().size() + b.times().size());
  all.insert(all.end(), a.times().begin(), a.times().end());
  all.insert(all.end(), b.times().begin(), b.times().end());
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double x : all) {
    if (out.empty() || x > out.back() + time_tol) out.push_back(x);
  }
  return out;
}

double sup_diff_between_events(const CadlagPath& a, const CadlagPath& b, double time_tol) {
  const double H = std::min(a.horizon(), b.horizon());
  const std::vector<double> ev = merged_event_times(a, b, time_tol);
  double best = 0.0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const double lo = ev[i];
    const double hi = (i + 1 < ev.size()) ? ev[i + 1] : H;
    if (hi <= lo + time_tol) continue;
    const double mid = 0.5 * (lo + hi);
    if (mid > H) break;
    best = std::max(best, std::fabs(a.eval(mid) - b.eval(mid)));
  }
  best = std::max(best, std::fabs(a.eval(H) - b.eval(H)));
  return best;
}

void write_path_csv(const CadlagPath& f, std::ostream& out, const std::vector<double>& grid) {
  std::vector<double> ts(f.times());
  for (double g : grid)
    if (g >= 0.0 && g <= f.horizon()) ts.push_back(g);
  ts.push_back(f.horizon());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  out << "t,value\n";
  char buf[64];
  for (double t : ts) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", t, f.eval(t));
    out << buf;
  }
}

}  // namespace tqlab
