#pragma once

#include <complex>

#include "stfd/errors.hpp"

namespace stfd::specfun {

// Order pair of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MlParams {
  double alpha;
  double beta;
  explicit MlParams(double a, double b = 1.0);
};

// Complete-monotonicity condition for E_{alpha,beta}(-x), x >= 0. Exposed
// as a predicate; evaluation does not enforce it.
bool completely_monotone(const MlParams& p);

// E_{alpha,beta}(z) for real z. Accuracy targets: relative 1e-10 for
// |z| <= 5, 1e-6 for z <= -5 (better in practice away from the dispatch
// boundaries).
double mittag_leffler(const MlParams& p, double z);

// One-parameter E_beta(z) on the complex ray family arising from the
// characteristic function of the fractional solution: arg z in
// (pi/2, 3pi/2), i.e. z = -w*exp(i*phi) with w > 0, |phi| < pi/2.
std::complex<double> mittag_leffler_ray(double beta, std::complex<double> z);

// e_{alpha,beta}(t; lambda) = t^(beta-1) E_{alpha,beta}(-lambda t^alpha).
double ml_relaxation(double alpha, double beta, double lambda, double t);

// Spectral density K_alpha(r) of E_alpha(-t^alpha):
//   E_alpha(-t^alpha) = int_0^inf exp(-r t) K_alpha(r) dr,  0 < alpha < 1.
double ml_spectral_density(double alpha, double r);

// Order of the second-kind Wright auxiliary function M_nu, 0 < nu < 1.
struct WrightOrder {
  double nu;
  explicit WrightOrder(double v);
};

// M_nu(z) = sum_{n>=0} (-z)^n / (n! Gamma(-nu n + 1 - nu)), z >= 0.
double wright_m(const WrightOrder& o, double z);

// F_nu(z) = nu z M_nu(z).
double wright_f(const WrightOrder& o, double z);

// Self-similar density t^(-nu) M_nu(x t^(-nu)) on x >= 0.
double wright_m_density(const WrightOrder& o, double x, double t);

// Closed-form absolute moment: int_0^inf r^delta M_nu(r) dr
//   = Gamma(delta+1)/Gamma(nu delta + 1), delta > -1.
double wright_m_moment(const WrightOrder& o, double delta);

// Individual evaluation routes, exposed for cross-route tests. Each is
// valid only on the domain the dispatcher sends it to (documented at the
// definition); agreement tests probe the overlap regions.
namespace detail {
double ml_taylor(double alpha, double beta, double z);
double ml_gll(double alpha, double beta, double z);        // 0<alpha<1, z<0
double ml_asymptotic(double alpha, double beta, double z);  // z << 0
double wright_series(double nu, double z);
double wright_saddle(double nu, double z);
}  // namespace detail

}  // namespace stfd::specfun
