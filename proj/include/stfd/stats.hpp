#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace stfd::stats {

// Kolmogorov-Smirnov sup-distance between the empirical law of `samples`
// and a reference CDF. The sample vector is copied and sorted internally.
double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf);

// Sup-distance between two empirical CDFs (ties handled by advancing both
// walks past the shared value).
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Large-sample critical value c * sqrt((m+n)/(m n)); c = 1.628 rejects at
// the 1% level.
double ks_two_sample_critical(std::size_t m, std::size_t n, double c = 1.628);

// Sample mean of exp(i kappa x).
std::complex<double> empirical_cf(const std::vector<double>& samples,
                                  double kappa);

// CDF built from a density tabulated on a strictly increasing grid.
// Segments integrate the linear density interpolant exactly, so F is
// piecewise quadratic; left of the grid the constant left-tail mass is
// returned, right of it F(last). Evaluation clamps to [0, 1].
class TabulatedCdf {
 public:
  TabulatedCdf(std::vector<double> xs, std::vector<double> us,
               double left_tail_mass);
  double operator()(double x) const;

 private:
  std::vector<double> xs_;
  std::vector<double> us_;
  std::vector<double> cum_;
};

}  // namespace stfd::stats
