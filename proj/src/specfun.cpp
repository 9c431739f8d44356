#include "stfd/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "stfd/gammafn.hpp"
#include "stfd/quadrature.hpp"

namespace stfd::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

MlParams::MlParams(double a, double b) : alpha(a), beta(b) {
  require_finite(a, "alpha");
  require_finite(b, "beta");
  if (a <= 0.0) throw DomainError("mittag-leffler order alpha must be > 0");
}

bool completely_monotone(const MlParams& p) {
  return p.alpha > 0.0 && p.alpha <= p.beta && p.beta <= 1.0;
}

namespace detail {

// Taylor series in long double with Neumaier-compensated accumulation.
// Cancellation loses roughly |z|^(1/alpha) nats for z < 0 (the largest term
// has that log-magnitude), so the dispatcher only sends arguments whose
// budget fits the 64-bit significand.
double ml_taylor(double alpha, double beta, double z) {
  const long double zl = z;
  long double sum = 0.0L, comp = 0.0L;
  long double pw = 1.0L;  // z^n
  const long double tiny = 1e-25L;
  long double maxmag = 0.0L;
  for (int n = 0; n < 20000; ++n) {
    const long double rg = recip_gamma_l(static_cast<long double>(alpha) * n +
                                         static_cast<long double>(beta));
    const long double term = pw * rg;
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    maxmag = std::max(maxmag, std::fabs(term));
    if (!std::isfinite(static_cast<double>(sum))) return (z > 0) ? kInf : -kInf;
    pw *= zl;
    if (std::fabs(pw) == std::numeric_limits<long double>::infinity())
      return (z > 0) ? kInf : -kInf;
    // The reciprocal gamma factor is eventually monotone decreasing, so a
    // term below threshold after the peak terminates the series.
    if (n > 4 && std::fabs(term) < tiny * std::max(maxmag, std::fabs(sum)) &&
        std::fabs(pw) * recip_gamma_l(alpha * (n + 1.0L) + beta) <
            tiny * std::max(maxmag, std::fabs(sum))) {
      break;
    }
  }
  return static_cast<double>(sum + comp);
}

// Real-axis integral representation for z < 0, 0 < alpha < 1,
// beta <= 1 + alpha:
//   E_{a,b}(z) = (1/pi) int_0^inf v^(a-b) e^(-v)
//                [v^a sin(pi(1-b)) - z sin(pi(1-b+a))]
//                / (v^(2a) - 2 v^a z cos(pi a) + z^2) dv.
// The substitution v = w^(1/p), p = 1+a-b, removes the algebraic endpoint
// factor exactly (the leftover w-exponent is zero), leaving a bounded
// integrand with an e^(-w^(1/p)) cutoff near w = 46^p.
double gll_core(double a, double b, double z) {
  const double p = 1.0 + a - b;  // >= a after the recursion below
  const double s1 = sinpi(1.0 - b);
  const double s2 = sinpi(1.0 - b + a);
  const double ca = cospi(a);
  const double inv_pi_p = 1.0 / (M_PI * p);
  auto f = [=](double w) {
    const double v = std::pow(w, 1.0 / p);
    const double va = std::pow(w, a / p);
    const double num = va * s1 - z * s2;
    const double den = va * va - 2.0 * va * z * ca + z * z;
    return inv_pi_p * std::exp(-v) * num / den;
  };
  const double wmax = std::pow(46.0, p);
  std::vector<double> knots;
  for (int k = 26; k >= 0; --k) knots.push_back(wmax * std::ldexp(1.0, -k));
  knots.insert(knots.begin(), 0.0);
  if (a > 0.5) {
    // Denominator dip where v^a ~ |z||cos(pi a)|; seed the resonance scale.
    const double vpk = std::pow(-z * std::fabs(ca), 1.0 / a);
    const double wpk = std::pow(vpk, p);
    for (double m : {0.5, 1.0, 1.8}) {
      const double w = wpk * m;
      if (w > 0.0 && w < wmax) knots.push_back(w);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  }
  QuadOptions opt;
  opt.abs_tol = 1e-300;
  opt.rel_tol = 5e-13;
  opt.max_intervals = 8000;
  return integrate(f, knots, opt).value;
}

double ml_gll(double alpha, double beta, double z) {
  // Reduce beta into (1-alpha, 1] with E_{a,b+a}(z) = (E_{a,b}(z) -
  // 1/Gamma(b))/z, then walk back up. Division by z (|z| > 3 here) keeps
  // the recursion stable.
  int k = static_cast<int>(std::ceil((beta - 1.0) / alpha - 1e-12));
  if (k < 0) k = 0;
  double b0 = beta - k * alpha;
  double e = gll_core(alpha, b0, z);
  for (int i = 0; i < k; ++i) {
    e = (e - recip_gamma(b0)) / z;
    b0 += alpha;
  }
  return e;
}

// Expansion for z -> -inf summed to its optimal truncation point:
//   E_{a,b}(z) ~ [saddle exponentials] - sum_{k>=1} z^(-k) / Gamma(b - a k).
// The smallest power term has magnitude ~exp(-|z|^(1/a)), which bounds the
// truncation error. For a >= 1 the conjugate saddle pair at |z|^(1/a)
// exp(+-i pi/a) contributes a damped oscillation that dominates as a -> 2
// (at a = 2 it is the entire function: E_2(-x) = cos(sqrt(x))); for a < 1
// both saddles leave the relevant sector and the power series is complete.
double ml_asymptotic(double alpha, double beta, double z) {
  long double sum = 0.0L;
  const long double zinv = 1.0L / static_cast<long double>(z);
  long double zk = zinv;
  // Term magnitudes wiggle with |sin(pi(b - a k))| (exact zeros at the Gamma
  // poles), so truncation tracks the smooth envelope |z|^-k Gamma(a k - b +
  // 1)/pi instead of the raw magnitudes.
  long double env_prev = std::numeric_limits<long double>::infinity();
  for (int k = 1; k < 400; ++k) {
    const long double g = static_cast<long double>(alpha) * k -
                          static_cast<long double>(beta) + 1.0L;
    if (g > 1754.0L) break;
    if (g > 0.0L) {
      const long double env = std::fabs(zk) * std::tgammal(g) / M_PI;
      if (env > env_prev) break;  // past the optimal truncation point
      env_prev = env;
    }
    sum -= recip_gamma_l(static_cast<long double>(beta) -
                         static_cast<long double>(alpha) * k) *
           zk;
    zk *= zinv;
  }
  double result = static_cast<double>(sum);
  if (alpha >= 1.0) {
    const double m = std::pow(-z, 1.0 / alpha);
    const double re = m * cospi(1.0 / alpha);
    const double im = m * sinpi(1.0 / alpha);
    if (re > -700.0) {
      const double damp = std::exp(re) * std::pow(m, (1.0 - beta));
      // w^(1-b) factor with w = m e^(i pi/a): modulus m^(1-b), phase shift.
      const double phase = im + M_PI * (1.0 - beta) / alpha;
      if (alpha == 1.0) {
        result += damp * std::cos(phase) / alpha;
      } else {
        result += 2.0 * damp * std::cos(phase) / alpha;
      }
    }
  }
  return result;
}

}  // namespace detail

double mittag_leffler(const MlParams& p, double z) {
  require_finite(z, "z");
  const double a = p.alpha, b = p.beta;
  if (a == 1.0 && b == 1.0) return std::exp(z);
  if (z >= 0.0) return detail::ml_taylor(a, b, z);  // positive terms, no loss
  const double m = std::pow(-z, 1.0 / a);  // cancellation budget in nats
  if (a < 1.0) {
    const bool taylor_ok = (-z <= 5.0) ? (m <= 12.0) : (m <= 25.0);
    if (taylor_ok) return detail::ml_taylor(a, b, z);
    return detail::ml_gll(a, b, z);
  }
  // alpha >= 1: Taylor until its round-off floor ~e^m*eps crosses the
  // asymptotic truncation floor ~e^(-m); the crossover sits near m = 22
  // for 64-bit long double significands.
  if (m <= 22.0) return detail::ml_taylor(a, b, z);
  return detail::ml_asymptotic(a, b, z);
}

std::complex<double> mittag_leffler_ray(double beta, std::complex<double> z) {
  if (!(beta > 0.0) || beta > 1.0)
    throw DomainError("ray evaluation requires 0 < beta <= 1");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("z must be finite");
  if (beta == 1.0) return std::exp(z);
  const double r = std::abs(z);
  if (r == 0.0) return {1.0, 0.0};
  const double m = std::pow(r, 1.0 / beta);
  if (m <= 27.0) {
    // Arguments off the negative real axis cancel less than the real-axis
    // worst case, so the budget is a little larger here.
    std::complex<long double> zl(z.real(), z.imag());
    std::complex<long double> sum(0.0L, 0.0L), pw(1.0L, 0.0L);
    for (int n = 0; n < 20000; ++n) {
      const long double rg = recip_gamma_l(static_cast<long double>(beta) * n + 1.0L);
      sum += pw * rg;
      pw *= zl;
      if (n > 4 && std::abs(pw) * recip_gamma_l(beta * (n + 1.0L) + 1.0L) <
                       1e-25L * std::max(1.0L, std::abs(sum))) {
        break;
      }
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
  }
  // Optimally truncated large-argument expansion along the ray. The term
  // magnitudes wiggle with |sin(pi beta k)| (exact zeros at the Gamma poles),
  // so truncation tracks the smooth envelope |z|^-k Gamma(beta k)/pi instead
  // of the raw magnitudes.
  std::complex<long double> sum(0.0L, 0.0L);
  const std::complex<long double> zinv =
      1.0L / std::complex<long double>(z.real(), z.imag());
  std::complex<long double> zk = zinv;
  long double env_prev = std::numeric_limits<long double>::infinity();
  for (int k = 1; k < 400; ++k) {
    const long double g = static_cast<long double>(beta) * k;
    if (g > 1754.0L) break;
    const long double env = std::abs(zk) * std::tgammal(g) / M_PI;
    if (env > env_prev) break;  // past the optimal truncation point
    sum -= zk * recip_gamma_l(1.0L - g);
    env_prev = env;
    zk *= zinv;
  }
  std::complex<double> result(static_cast<double>(sum.real()),
                              static_cast<double>(sum.imag()));
  // Saddle exponential (1/beta) exp(z^(1/beta)), present only inside the
  // Stokes sector |arg z| < beta pi. On this ray family it decays there;
  // outside the sector exp(z^(1/beta)) can grow and must not be added.
  if (std::fabs(std::arg(z)) < beta * M_PI) {
    const std::complex<double> w = std::exp(std::log(z) / beta);
    if (w.real() > -700.0) result += std::exp(w) / beta;
  }
  return result;
}

double ml_relaxation(double alpha, double beta, double lambda, double t) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw DomainError("relaxation requires 0 < alpha <= 1");
  require_finite(beta, "beta");
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  return std::pow(t, beta - 1.0) *
         mittag_leffler(MlParams(alpha, beta), -lambda * std::pow(t, alpha));
}

double ml_spectral_density(double alpha, double r) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw DomainError("spectral density requires 0 < alpha < 1");
  if (!(r > 0.0)) throw DomainError("r must be > 0");
  const double ra = std::pow(r, alpha);
  const double den = ra * ra + 2.0 * ra * cospi(alpha) + 1.0;
  return std::pow(r, alpha - 1.0) * sinpi(alpha) / (M_PI * den);
}

WrightOrder::WrightOrder(double v) : nu(v) {
  require_finite(v, "nu");
  if (!(v > 0.0) || !(v < 1.0)) throw DomainError("wright order nu must lie in (0,1)");
}

namespace detail {

double wright_series(double nu, double z) {
  constexpr long double kLnPi = 1.14472988584940017414342735135305871L;
  const long double zl = z;
  const long double nul = nu;
  long double sum = 0.0L, comp = 0.0L;
  long double pw = 1.0L;   // (-z)^n / n!, while directly representable
  long double lnpw = 0.0L; // ln|pw| once tgammal or pw leaves direct range
  bool logphase = false;
  long double maxmag = 0.0L;
  int small_run = 0;
  for (int n = 0; n < 60000; ++n) {
    const long double y = nul * (n + 1.0L);  // reflection argument is 1 - y
    if (!logphase && y > 1740.0L) {
      // tgammal overflows past ~1755.5, and for nu -> 1 the series tail out
      // here still carries the directing spike; continue with logs.
      lnpw = std::log(std::fabs(pw));
      logphase = true;
    }
    long double term;
    if (!logphase) {
      term = pw * recip_gamma_l(1.0L - y);
    } else {
      const long double s = sinpi_l(1.0L - y);
      if (s == 0.0L) {
        term = 0.0L;
      } else {
        const long double lt =
            lnpw + std::lgammal(y) + std::log(std::fabs(s)) - kLnPi;
        const long double mag = std::exp(lt);
        const bool neg = ((n & 1) != 0) != (s < 0.0L);
        term = neg ? -mag : mag;
      }
    }
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    maxmag = std::max(maxmag, std::fabs(term));
    if (!logphase) {
      pw *= -zl / (n + 1.0L);
      if (pw == 0.0L) break;
    } else {
      lnpw += std::log(zl / (n + 1.0L));
    }
    // A small power factor alone does not bound the tail: 1/Gamma grows
    // super-exponentially along the negative axis. Stop only after a run of
    // small nonzero terms; exact pole zeros are skipped.
    if (term != 0.0L) {
      small_run =
          (std::fabs(term) < 1e-26L * std::max(maxmag, 1e-300L)) ? small_run + 1
                                                                 : 0;
      if (n > 8 && small_run >= 3) break;
    }
  }
  return std::max(0.0, static_cast<double>(sum + comp));
}

// Hankel-contour representation deformed to the vertical line through the
// real saddle sigma* = (nu z)^(1/(1-nu)) of g(sigma) = sigma - z sigma^nu:
//   M_nu(z) = (e^(g0)/pi) int_0^inf Re[e^(g(sigma*+iy)-g0) (sigma*+iy)^(nu-1)] dy,
// g0 = g(sigma*) = -sigma*(1-nu)/nu < 0, g''(sigma*) > 0. The linear phase
// vanishes at the saddle, so the integrand decays like a Gaussian of width
// 1/sqrt(g'') before the stretched-exponential tail takes over.
double wright_saddle(double nu, double z) {
  const double lnsig = (std::log(nu) + std::log(z)) / (1.0 - nu);
  if (lnsig > 700.0) return 0.0;  // g0 below the representable floor
  const double sig = std::exp(lnsig);
  const double g0 = -sig * (1.0 - nu) / nu;
  // e^(g0) underflows even against the widest plausible width prefactor.
  if (g0 < -805.0) return 0.0;
  const double lngpp = std::log(z) + std::log(nu * (1.0 - nu)) + (nu - 2.0) * lnsig;
  const double yscale = std::exp(-0.5 * lngpp);
  auto f = [=](double s) {
    const std::complex<double> w(sig, yscale * s);
    const std::complex<double> g = w - z * std::pow(w, nu);
    const std::complex<double> val =
        std::exp(g - g0) * std::pow(w, nu - 1.0);
    return val.real();
  };
  std::vector<double> knots{0.0, 0.35, 0.7, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0};
  for (int k = 1; k <= 14; ++k) knots.push_back(8.0 * std::ldexp(1.0, k));
  QuadOptions opt;
  opt.abs_tol = 1e-300;
  opt.rel_tol = 1e-11;
  opt.max_intervals = 8000;
  const double integral = integrate(f, knots, opt).value;
  if (integral <= 0.0) return 0.0;
  const double lnm = g0 + std::log(integral * yscale / M_PI);
  if (lnm < -745.0) return 0.0;
  return std::exp(lnm);
}

}  // namespace detail

namespace {

// Chooses between the alternating series and the saddle-line integral.
// n* = sigma*/nu estimates the index of the largest series term; lnmax is
// a Stirling bound on its log magnitude; the series is kept while the
// cancellation (lnmax - ln M ~ lnmax - g0) fits a 64-bit significand with
// room to spare.
double wright_m_dispatch(double nu, double z) {
  if (z == 0.0) return recip_gamma(1.0 - nu);
  const double lnsig = (std::log(nu) + std::log(z)) / (1.0 - nu);
  bool series_ok = false;
  if (lnsig < std::log(2000.0 * nu)) {
    const double nstar = std::max(1.0, std::exp(lnsig) / nu);
    if (nstar <= 2000.0 && nu * (nstar + 1.0) <= 1740.0) {
      const double g0 = -std::exp(lnsig) * (1.0 - nu) / nu;
      const double lnmax = nstar * std::log(z) - std::lgamma(nstar + 1.0) +
                           std::lgamma(nu * (nstar + 1.0)) - std::log(M_PI);
      series_ok = (lnmax - g0) <= 21.0;
    }
  }
  if (series_ok) return detail::wright_series(nu, z);
  return detail::wright_saddle(nu, z);
}

}  // namespace

double wright_m(const WrightOrder& o, double z) {
  require_finite(z, "z");
  if (z < 0.0) throw DomainError("wright_m requires z >= 0");
  return wright_m_dispatch(o.nu, z);
}

double wright_f(const WrightOrder& o, double z) {
  return o.nu * z * wright_m(o, z);
}

double wright_m_density(const WrightOrder& o, double x, double t) {
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (x < 0.0) throw DomainError("wright_m_density requires x >= 0");
  const double scale = std::pow(t, -o.nu);
  return scale * wright_m(o, x * scale);
}

double wright_m_moment(const WrightOrder& o, double delta) {
  require_finite(delta, "delta");
  if (!(delta > -1.0)) throw DomainError("moment order must exceed -1");
  return std::tgamma(delta + 1.0) / std::tgamma(o.nu * delta + 1.0);
}

}  // namespace stfd::specfun
