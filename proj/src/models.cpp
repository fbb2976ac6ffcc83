#include "tqlab/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tqlab {

namespace {

std::vector<double> parse_params(const std::string& spec, std::string& name) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("model spec missing ':': " + spec);
  name = spec.substr(0, colon);
  std::vector<double> params;
  std::size_t pos = colon + 1;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (tok.empty()) throw std::invalid_argument("empty parameter in model spec: " + spec);
    std::size_t used = 0;
    params.push_back(std::stod(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("bad parameter in model spec: " + spec);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return params;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

ArrivalModel ArrivalModel::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential arrivals need rate > 0");
  return ArrivalModel(Family::Exponential, rate);
}

ArrivalModel ArrivalModel::uniform(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("uniform arrivals need b > 0");
  return ArrivalModel(Family::Uniform, b);
}

ArrivalModel ArrivalModel::triangular_decreasing(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("triangular arrivals need b > 0");
  return ArrivalModel(Family::TriangularDecreasing, b);
}

ArrivalModel ArrivalModel::parse(const std::string& spec) {
  std::string name;
  const auto p = parse_params(spec, name);
  if (name == "exp") {
    if (p.size() != 1) throw std::invalid_argument("exp takes one parameter: " + spec);
    return exponential(p[0]);
  }
  if (name == "unif") {
    if (p.size() == 1) return uniform(p[0]);
    if (p.size() == 2) {
      if (p[0] != 0.0) throw std::invalid_argument("uniform arrivals must start at 0: " + spec);
      return uniform(p[1]);
    }
    throw std::invalid_argument("unif takes one or two parameters: " + spec);
  }
  if (name == "tri") {
    if (p.size() == 1) return triangular_decreasing(p[0]);
    if (p.size() == 2) {
      if (p[0] != 0.0) throw std::invalid_argument("triangular arrivals must start at 0: " + spec);
      return triangular_decreasing(p[1]);
    }
    throw std::invalid_argument("tri takes one or two parameters: " + spec);
  }
  throw std::invalid_argument("unknown arrival family: " + spec);
}

double ArrivalModel::cdf(double t) const {
  if (t <= 0.0) return 0.0;
  switch (family_) {
    case Family::Exponential:
      return -std::expm1(-param_ * t);
    case Family::Uniform:
      return std::min(t / param_, 1.0);
    case Family::TriangularDecreasing: {
      if (t >= param_) return 1.0;
      const double r = t / param_;
      return r * (2.0 - r);
    }
  }
  return 0.0;
}

double ArrivalModel::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("quantile: u outside [0,1]");
  switch (family_) {
    case Family::Exponential:
      return -std::log1p(-u) / param_;
    case Family::Uniform:
      return param_ * u;
    case Family::TriangularDecreasing:
      return param_ * (1.0 - std::sqrt(1.0 - u));
  }
  return 0.0;
}

double ArrivalModel::density_at_zero() const {
  switch (family_) {
    case Family::Exponential:
      return param_;
    case Family::Uniform:
      return 1.0 / param_;
    case Family::TriangularDecreasing:
      return 2.0 / param_;
  }
  return 0.0;
}

double ArrivalModel::density_slope_at_zero() const {
  switch (family_) {
    case Family::Exponential:
      return -param_ * param_;
    case Family::Uniform:
      return 0.0;
    case Family::TriangularDecreasing:
      return -2.0 / (param_ * param_);
  }
  return 0.0;
}

std::string ArrivalModel::to_string() const {
  switch (family_) {
    case Family::Exponential:
      return "exp:" + fmt(param_);
    case Family::Uniform:
      return "unif:0," + fmt(param_);
    case Family::TriangularDecreasing:
      return "tri:0," + fmt(param_);
  }
  return "";
}

ServiceModel ServiceModel::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential service needs rate > 0");
  return ServiceModel(Family::Exponential, rate, 0.0);
}

ServiceModel ServiceModel::deterministic(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("deterministic service needs c > 0");
  return ServiceModel(Family::Deterministic, c, 0.0);
}

ServiceModel ServiceModel::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw std::invalid_argument("gamma service needs shape, scale > 0");
  return ServiceModel(Family::Gamma, shape, scale);
}

ServiceModel ServiceModel::uniform(double a, double b) {
  if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("uniform service needs 0 <= a < b");
  return ServiceModel(Family::Uniform, a, b);
}

ServiceModel ServiceModel::parse(const std::string& spec) {
  std::string name;
  const auto p = parse_params(spec, name);
  if (name == "exp" && p.size() == 1) return exponential(p[0]);
  if (name == "det" && p.size() == 1) return deterministic(p[0]);
  if (name == "gamma" && p.size() == 2) return gamma(p[0], p[1]);
  if (name == "unif" && p.size() == 2) return uniform(p[0], p[1]);
  throw std::invalid_argument("unknown service family: " + spec);
}

double ServiceModel::mean() const {
  switch (family_) {
    case Family::Exponential:
      return 1.0 / p1_;
    case Family::Deterministic:
      return p1_;
    case Family::Gamma:
      return p1_ * p2_;
    case Family::Uniform:
      return 0.5 * (p1_ + p2_);
  }
  return 0.0;
}

double ServiceModel::second_moment() const {
  switch (family_) {
    case Family::Exponential:
      return 2.0 / (p1_ * p1_);
    case Family::Deterministic:
      return p1_ * p1_;
    case Family::Gamma:
      return p1_ * (p1_ + 1.0) * p2_ * p2_;
    case Family::Uniform:
      return (p1_ * p1_ + p1_ * p2_ + p2_ * p2_) / 3.0;
  }
  return 0.0;
}

std::string ServiceModel::to_string() const {
  switch (family_) {
    case Family::Exponential:
      return "exp:" + fmt(p1_);
    case Family::Deterministic:
      return "det:" + fmt(p1_);
    case Family::Gamma:
      return "gamma:" + fmt(p1_) + "," + fmt(p2_);
    case Family::Uniform:
      return "unif:" + fmt(p1_) + "," + fmt(p2_);
  }
  return "";
}

double ServiceModel::sample(Rng& rng) const {
  switch (family_) {
    case Family::Exponential:
      return -std::log1p(-rng.uniform01()) / p1_;
    case Family::Deterministic:
      return p1_;
    case Family::Gamma:
      return rng.gamma(p1_, p2_);
    case Family::Uniform:
      return p1_ + (p2_ - p1_) * rng.uniform01();
  }
  return 0.0;
}

double heavy_traffic_gap(const ArrivalModel& arrival, const ServiceModel& service) {
  return service.mean() * arrival.density_at_zero() - 1.0;
}

std::vector<double> sample_arrival_times(const ArrivalModel& a, long long n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample_arrival_times: n must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.push_back(a.quantile(rng.uniform01()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sample_arrival_times_within(const ArrivalModel& a, long long n, double horizon,
                                                Rng& rng) {
  if (n < 0) throw std::invalid_argument("sample_arrival_times_within: n must be >= 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("sample_arrival_times_within: horizon <= 0");
  const double p = a.cdf(horizon);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(static_cast<double>(n) * p * 1.25) + 16);
  for (long long i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    if (u <= p) out.push_back(a.quantile(u));
  }
  std::sort(out.begin(), out.end());
  // quantile round-off can land one ulp past the window edge
  for (auto it = out.rbegin(); it != out.rend() && *it > horizon; ++it) *it = horizon;
  return out;
}

std::vector<double> sample_service_times(const ServiceModel& s, long long m, Rng& rng) {
  if (m < 0) throw std::invalid_argument("sample_service_times: m must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) out.push_back(s.sample(rng));
  return out;
}

}  // namespace tqlab
