#pragma once

#include <complex>

#include "stfd/errors.hpp"

namespace stfd::stable {

// Feller pair (alpha, theta) restricted to the diamond
// 0 < alpha <= 2, |theta| <= min(alpha, 2 - alpha).
struct StableParams {
  double alpha;
  double theta;
  StableParams(double a, double th);
};

StableParams validate_params(double alpha, double theta);

// Evaluation route chosen for a given (params, x). The densities on the
// diamond boundary are one-sided; dirac_limit marks the degenerate
// (alpha=1, theta=+-1) drift laws which have no density.
enum class StableRegime {
  gaussian,
  cauchy_family,
  levy_smirnov_pair,
  dirac_limit,
  series_small_alpha,
  series_large_alpha,
  tail_asymptotic,
  extremal_integral,
  cf_inversion,
  alpha_one_skewed_unsupported,
};

const char* regime_name(StableRegime r);

StableRegime classify(const StableParams& p, double x);

// Density L_alpha^theta(x). Negative x is served through the mirror rule
// L_alpha^theta(-x) = L_alpha^{-theta}(x), so both signs share one code path.
// Throws DiracLimitError at (alpha=1, |theta|=1) and DomainError for skewed
// parameters within 1e-4 of alpha=1 (series radius collapses there; callers
// get a refusal instead of silent inaccuracy).
double stable_pdf(const StableParams& p, double x);

// Self-similar rescaling t^(-1/alpha) L(x t^(-1/alpha)).
double stable_pdf_scaled(const StableParams& p, double x, double t);

// Characteristic function exp(-|k|^alpha exp(i sign(k) theta pi/2)) under
// the e^{+ikx} Fourier convention.
std::complex<double> stable_cf(const StableParams& p, double kappa);

// Extremal densities through the Wright M function: an evaluation route
// independent of stable_pdf, kept for cross-checks.
//   0 < alpha < 1:  (alpha/x^(alpha+1)) M_alpha(x^-alpha) = L_alpha^{-alpha}(x)
//   1 < alpha <= 2: (1/alpha) M_{1/alpha}(x)             = L_alpha^{alpha-2}(x)
double extremal_from_wright(double alpha, double x);

// One-term power tail (Gamma(1+alpha)/pi) sin((pi/2)(alpha - theta)) x^-(alpha+1)
// on the x > 0 side (mirrored otherwise). Exactly zero on an exponentially
// thin extremal side; throws for alpha = 2 (no power tail).
double stable_tail(const StableParams& p, double x);

namespace detail {

// Convergent series for 0 < alpha < 1 in powers of x^-alpha; the same term
// family summed to optimal truncation is the tail expansion for alpha > 1.
double series_small_alpha(double alpha, double theta, double x);
// Convergent series for 1 < alpha <= 2 in powers of x.
double series_large_alpha(double alpha, double theta, double x);
// Tail expansion for 1 < alpha < 2, x large: optimally truncated.
double tail_asymptotic(double alpha, double theta, double x);
// The powers-of-x family read as an x -> 0 expansion for 0 < alpha < 1:
// optimally truncated (its first term is the exact central value
// Gamma(1+1/alpha) cos(theta pi/(2 alpha))/pi).
double central_asymptotic(double alpha, double theta, double x);
// One-sided extremal density L_beta^{-beta}(x), x > 0, 0 < beta < 1, by the
// finite-interval integral with the peeled exponential peak.
double zolotarev_extremal(double beta, double x);
// Direct Fourier inversion of the characteristic function.
double cf_inversion(double alpha, double theta, double x);

// Round-off forecasts deciding series vs integral/tail routes; pure
// functions of the inputs so classify() and stable_pdf() cannot disagree.
bool series_small_ok(double alpha, double theta, double x);
bool series_large_ok(double alpha, double theta, double x);
bool central_asymptotic_ok(double alpha, double theta, double x);

}  // namespace detail

}  // namespace stfd::stable
