#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tqlab/cadlag_path.hpp"

namespace tqlab {

// Symmetric 2x2 covariance matrix.
struct Cov2 {
  double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;
};

// Exact two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|,
// computed over the merged sorted samples; ties handled exactly.
double two_sample_ks(std::vector<double> a, std::vector<double> b);

// One-sample KS statistic against a continuous CDF.
double one_sample_ks(std::vector<double> samples, const std::function<double(double)>& cdf);

// Large-sample critical value c(alpha) * sqrt((m+n)/(m n)) for the two-sample
// test, c(alpha) = sqrt(-ln(alpha/2)/2); c(0.01) ~ 1.628.
double ks_two_sample_critical(double alpha, std::size_t m, std::size_t n);
double ks_one_sample_critical(double alpha, std::size_t n);

// Unbiased sample covariance of paired observations.
Cov2 empirical_cov2(const std::vector<std::array<double, 2>>& pairs);

// f0 * [[t1, t1], [t1, t2]] -- the limit covariance of the centered arrival
// process at two ordered times 0 < t1 < t2.
Cov2 theoretical_cov2(double f0, double t1, double t2);

// sup_{t<=T} |path(t) - slope * t|, left limits included.
double sup_dev_from_line(const CadlagPath& path, double slope, double T);

// Unbiased sample variance divided by the predicted value.
double variance_order(const std::vector<double>& samples, double predicted);

double sample_mean(const std::vector<double>& samples);
double sample_variance(const std::vector<double>& samples);
// Median (average of the central pair for even counts).
double median(std::vector<double> samples);

}  // namespace tqlab
