#include "stfd/stats.hpp"

#include <algorithm>
#include <cmath>

#include "stfd/errors.hpp"

namespace stfd::stats {

double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

double ks_two_sample_critical(std::size_t m, std::size_t n, double c) {
  const double dm = static_cast<double>(m), dn = static_cast<double>(n);
  return c * std::sqrt((dm + dn) / (dm * dn));
}

std::complex<double> empirical_cf(const std::vector<double>& samples,
                                  double kappa) {
  if (samples.empty()) throw DomainError("empty sample");
  double re = 0.0, im = 0.0;
  for (double x : samples) {
    re += std::cos(kappa * x);
    im += std::sin(kappa * x);
  }
  const double n = static_cast<double>(samples.size());
  return {re / n, im / n};
}

TabulatedCdf::TabulatedCdf(std::vector<double> xs, std::vector<double> us,
                           double left_tail_mass)
    : xs_(std::move(xs)), us_(std::move(us)) {
  if (xs_.size() < 2 || xs_.size() != us_.size())
    throw DomainError("CDF table needs matching grids of at least two points");
  cum_.resize(xs_.size());
  cum_[0] = left_tail_mass;
  for (std::size_t i = 1; i < xs_.size(); ++i)
    cum_[i] =
        cum_[i - 1] + 0.5 * (us_[i] + us_[i - 1]) * (xs_[i] - xs_[i - 1]);
}

double TabulatedCdf::operator()(double x) const {
  if (x <= xs_.front()) return std::clamp(cum_.front(), 0.0, 1.0);
  if (x >= xs_.back()) return std::clamp(cum_.back(), 0.0, 1.0);
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double dx = x - xs_[i];
  const double slope = (us_[i + 1] - us_[i]) / (xs_[i + 1] - xs_[i]);
  const double f = cum_[i] + dx * (us_[i] + 0.5 * slope * dx);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace stfd::stats
