#pragma once

namespace stfd {

// sin(pi*x) and cos(pi*x) with exact argument reduction on the integer
// lattice, so that sinpi(n) == 0 for integer n regardless of magnitude.
double sinpi(double x);
double cospi(double x);
long double sinpi_l(long double x);

// Gamma(x). Thin wrapper over std::tgamma (poles follow IEEE conventions).
double gamma_fn(double x);

// 1/Gamma(x), exactly 0 at the poles x = 0, -1, -2, ...  Series over
// reciprocal gamma factors rely on that convention to drop pole terms.
double recip_gamma(double x);
long double recip_gamma_l(long double x);

}  // namespace stfd
