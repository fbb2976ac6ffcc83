#include "tqlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqlab {

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::domain_error("two_sample_ks: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double m = static_cast<double>(a.size());
  const double n = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / m - static_cast<double>(j) / n));
  }
  return d;
}

double one_sample_ks(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::domain_error("one_sample_ks: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - F));
    d = std::max(d, std::fabs(F - static_cast<double>(i) / n));
  }
  return d;
}

double ks_two_sample_critical(double alpha, std::size_t m, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks critical: alpha in (0,1)");
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  return c * std::sqrt((dm + dn) / (dm * dn));
}

double ks_one_sample_critical(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks critical: alpha in (0,1)");
  const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  return c / std::sqrt(static_cast<double>(n));
}

Cov2 empirical_cov2(const std::vector<std::array<double, 2>>& pairs) {
  if (pairs.size() < 2) throw std::domain_error("empirical_cov2: need >= 2 pairs");
  const double n = static_cast<double>(pairs.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : pairs) {
    mx += p[0];
    my += p[1];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : pairs) {
    const double dx = p[0] - mx;
    const double dy = p[1] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double denom = n - 1.0;
  return Cov2{sxx / denom, sxy / denom, sxy / denom, syy / denom};
}

Cov2 theoretical_cov2(double f0, double t1, double t2) {
  if (!(f0 > 0.0)) throw std::domain_error("theoretical_cov2: f0 must be > 0");
  if (!(0.0 < t1 && t1 < t2)) throw std::domain_error("theoretical_cov2: need 0 < t1 < t2");
  return Cov2{f0 * t1, f0 * t1, f0 * t1, f0 * t2};
}

double sup_dev_from_line(const CadlagPath& path, double slope, double T) {
  return sup_diff(path, CadlagPath::line(0.0, slope, std::max(T, path.horizon())), T);
}

double variance_order(const std::vector<double>& samples, double predicted) {
  if (!(predicted > 0.0)) throw std::domain_error("variance_order: predicted must be > 0");
  return sample_variance(samples) / predicted;
}

double sample_mean(const std::vector<double>& samples) {
  if (samples.empty()) throw std::domain_error("sample_mean: empty sample");
  double s = 0.0;
  for (double x : samples) s += x;
  return s / static_cast<double>(samples.size());
}

double sample_variance(const std::vector<double>& samples) {
  if (samples.size() < 2) throw std::domain_error("sample_variance: need >= 2 samples");
  const double m = sample_mean(samples);
  double s = 0.0;
  for (double x : samples) s += (x - m) * (x - m);
  return s / static_cast<double>(samples.size() - 1);
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw std::domain_error("median: empty sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t k = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[k];
  return 0.5 * (samples[k - 1] + samples[k]);
}

}  // namespace tqlab
