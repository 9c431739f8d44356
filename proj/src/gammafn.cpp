#include "stfd/gammafn.hpp"

#include <cmath>
#include <limits>

namespace stfd {

namespace {
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
}

double sinpi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  // Reduce to r in [-0.5, 0.5] around the nearest integer; sin(pi*(n+r))
  // = (-1)^n sin(pi*r), which keeps lattice zeros exact.
  double n = std::nearbyint(x);
  double r = x - n;
  double s = std::sin(M_PI * r);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

double cospi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double n = std::nearbyint(x);
  double r = x - n;
  // Half-integers are exact zeros of cos(pi x); cos(M_PI*r) alone leaves
  // them at ~6e-17.
  if (r == 0.5 || r == -0.5) return 0.0;
  double c = std::cos(M_PI * r);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -c : c;
}

long double sinpi_l(long double x) {
  long double n = std::nearbyint(x);
  long double r = x - n;
  long double s = std::sin(kPiL * r);
  return (std::fmod(std::fabs(n), 2.0L) == 1.0L) ? -s : s;
}

double gamma_fn(double x) { return std::tgamma(x); }

double recip_gamma(double x) {
  return static_cast<double>(recip_gamma_l(static_cast<long double>(x)));
}

long double recip_gamma_l(long double x) {
  if (x > 0.5L) {
    // tgammal overflows past ~1755.5; 1/Gamma underflows to 0 there, which
    // is the correct limit for a series coefficient.
    if (x > 1755.0L) return 0.0L;
    return 1.0L / std::tgammal(x);
  }
  // Reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi. At nonpositive
  // integers sinpi_l vanishes exactly, giving the required 0.
  long double s = sinpi_l(x);
  if (s == 0.0L) return 0.0L;
  long double y = 1.0L - x;  // >= 0.5
  if (y > 1755.0L) {
    // |1/Gamma| grows super-exponentially on the far negative axis; signal
    // saturation instead of returning a quietly wrong finite number.
    return (s > 0.0L) ? std::numeric_limits<long double>::infinity()
                      : -std::numeric_limits<long double>::infinity();
  }
  return std::tgammal(y) * s / kPiL;
}

}  // namespace stfd
