#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "stfd/errors.hpp"
#include "stfd/gammafn.hpp"
#include "stfd/specfun.hpp"

using namespace stfd;
using specfun::MlParams;
using specfun::WrightOrder;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

double rel_err_c(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("mittag-leffler closed forms") {
  CHECK(specfun::mittag_leffler(MlParams(1.0, 1.0), -1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(specfun::mittag_leffler(MlParams(1.0, 1.0), 2.5) ==
        doctest::Approx(std::exp(2.5)).epsilon(1e-14));
  // E_2(-z^2) = cos(z): one value inside the Taylor window, one far outside.
  CHECK(specfun::mittag_leffler(MlParams(2.0, 1.0), -M_PI * M_PI) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(specfun::mittag_leffler(MlParams(2.0, 1.0), -1000.0) ==
        doctest::Approx(std::cos(std::sqrt(1000.0))).epsilon(1e-12));
  // E_{1/2}(-x) = exp(x^2) erfc(x).
  CHECK(specfun::mittag_leffler(MlParams(0.5, 1.0), -2.0) ==
        doctest::Approx(std::exp(4.0) * std::erfc(2.0)).epsilon(1e-12));
  CHECK(specfun::mittag_leffler(MlParams(0.5, 1.0), 0.0) == 1.0);
}

TEST_CASE("mittag-leffler frozen values, series window") {
  // Expected values computed with mpmath at 120 significant digits.
  CHECK(rel_err(specfun::mittag_leffler(MlParams(0.5, 1.0), -2.0),
                0.2553956763105057438651) < 5e-13);
  CHECK(rel_err(specfun::mittag_leffler(MlParams(1.3, 1.0), -50.0),
                -0.004798038492797231951283) < 1e-8);
  CHECK(rel_err(specfun::mittag_leffler(MlParams(1.9, 1.0), -355.0),
                -0.1710129556494914845133) < 1e-8);
}

TEST_CASE("mittag-leffler frozen values, integral route") {
  CHECK(rel_err(specfun::mittag_leffler(MlParams(0.5, 1.0), -30.0),
                0.01879588886141675149713) < 1e-9);
  CHECK(rel_err(specfun::mittag_leffler(MlParams(0.6, 0.8), -12.0),
                0.01999504701042664464189) < 1e-9);
  CHECK(rel_err(specfun::mittag_leffler(MlParams(0.9, 1.0), -40.0),
                0.002743449697792099486956) < 1e-9);
}

TEST_CASE("mittag-leffler frozen values, far-field expansion") {
  CHECK(rel_err(specfun::mittag_leffler(MlParams(1.3, 1.0), -80.0),
                -0.002957399414203978246059) < 1e-8);
  CHECK(rel_err(specfun::mittag_leffler(MlParams(1.5, 2.0), -200.0),
                0.002820814901513313240085) < 5e-7);
  // The oscillatory exponential pair dominates the algebraic part here.
  CHECK(rel_err(specfun::detail::ml_asymptotic(1.9, 1.0, -355.0),
                -0.1710129556494914845133) < 1e-7);
}

TEST_CASE("mittag-leffler evaluation routes agree on overlap") {
  // Taylor carries ~|z|^(1/alpha) nats of cancellation; compare against the
  // long double oracle where that stays below ~14 digits.
  for (double z : {-0.5, -2.0, -4.5}) {
    const double got = specfun::mittag_leffler(MlParams(0.7, 1.0), z);
    const double want =
        static_cast<double>(oracles::ml_taylor(0.7, 1.0, (long double)z));
    CHECK(rel_err(got, want) < 1e-12);
  }
  // Integral route vs oracle Taylor where the oracle's cancellation loss
  // still fits its long double budget.
  for (double z : {-2.5, -4.5}) {
    const double got = specfun::detail::ml_gll(0.55, 1.0, z);
    const double want =
        static_cast<double>(oracles::ml_taylor(0.55, 1.0, (long double)z));
    CHECK(rel_err(got, want) < 1e-9);
  }
  // Farther out the oracle has no digits left; frozen mpmath values instead.
  CHECK(rel_err(specfun::detail::ml_gll(0.55, 1.0, -6.0),
                0.08599823372032481651405) < 1e-9);
  CHECK(rel_err(specfun::detail::ml_gll(0.55, 1.0, -9.0),
                0.05723587530115717807473) < 1e-9);
}

TEST_CASE("mittag-leffler parameter recursion") {
  // E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z).
  for (double a : {0.4, 0.8, 1.5}) {
    for (double z : {-3.0, -0.7, 1.2}) {
      const double lhs = specfun::mittag_leffler(MlParams(a, 1.0), z);
      const double rhs =
          recip_gamma(1.0) + z * specfun::mittag_leffler(MlParams(a, 1.0 + a), z);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("mittag-leffler complete monotonicity predicate and decay") {
  CHECK(specfun::completely_monotone(MlParams(0.5, 1.0)));
  CHECK(specfun::completely_monotone(MlParams(0.9, 0.9)));
  CHECK(specfun::completely_monotone(MlParams(1.0, 1.0)));
  CHECK_FALSE(specfun::completely_monotone(MlParams(1.2, 1.0)));
  CHECK_FALSE(specfun::completely_monotone(MlParams(0.8, 0.5)));
  // On a completely monotone pair the restriction to the negative axis is
  // positive and decreasing.
  const MlParams p(0.65, 1.0);
  double prev = specfun::mittag_leffler(p, 0.0);
  CHECK(prev == 1.0);
  for (int i = 1; i <= 60; ++i) {
    const double v = specfun::mittag_leffler(p, -0.5 * i);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("mittag-leffler ray values") {
  using cplx = std::complex<double>;
  const cplx i(0.0, 1.0);
  CHECK(std::abs(specfun::mittag_leffler_ray(1.0, cplx(-2.0, 3.0)) -
                 std::exp(cplx(-2.0, 3.0))) < 1e-14);
  CHECK(std::abs(specfun::mittag_leffler_ray(0.7, cplx(0.0, 0.0)) -
                 cplx(1.0, 0.0)) < 1e-15);
  // Expected values computed with mpmath at 120 significant digits.
  const cplx z1 = 5.0 * std::exp(i * (0.75 * M_PI));
  CHECK(rel_err_c(specfun::mittag_leffler_ray(0.8, z1),
                  cplx(0.02763162341057113138095, 0.04468028500637767373779)) <
        1e-9);
  const cplx z2 = 30.0 * std::exp(i * (0.9 * M_PI));
  CHECK(rel_err_c(specfun::mittag_leffler_ray(0.8, z2),
                  cplx(0.007156970228834095595816, 0.002432173221481996587368)) <
        5e-6);
  // Inside the Stokes sector the subdominant exponential still matters.
  const cplx z3 = 40.0 * std::exp(i * (0.55 * M_PI));
  CHECK(rel_err_c(specfun::mittag_leffler_ray(0.95, z3),
                  cplx(0.0001361630958073810544566, 0.00128306346974612071794)) <
        5e-6);
}

TEST_CASE("mittag-leffler ray matches real evaluation on the negative axis") {
  for (double beta : {0.6, 0.8, 0.95}) {
    for (double w : {0.5, 3.0}) {
      const auto ray = specfun::mittag_leffler_ray(beta, {-w, 0.0});
      const double real = specfun::mittag_leffler(MlParams(beta, 1.0), -w);
      CHECK(std::fabs(ray.imag()) < 1e-12);
      CHECK(rel_err(ray.real(), real) < 1e-10);
    }
    const auto ray = specfun::mittag_leffler_ray(beta, {-20.0, 0.0});
    const double real = specfun::mittag_leffler(MlParams(beta, 1.0), -20.0);
    CHECK(rel_err(ray.real(), real) < 1e-6);
  }
  // Conjugate symmetry off the axis.
  const auto up = specfun::mittag_leffler_ray(0.8, {-3.0, 2.0});
  const auto dn = specfun::mittag_leffler_ray(0.8, {-3.0, -2.0});
  CHECK(up.real() == doctest::Approx(dn.real()).epsilon(1e-14));
  CHECK(up.imag() == doctest::Approx(-dn.imag()).epsilon(1e-14));
  // Cross-route at moderate modulus against the complex Taylor oracle.
  const std::complex<double> zc =
      10.0 * std::exp(std::complex<double>(0.0, 0.8 * M_PI));
  CHECK(rel_err_c(specfun::mittag_leffler_ray(0.9, zc),
                  oracles::ml_taylor_complex(0.9, zc)) < 1e-10);
}

TEST_CASE("relaxation density and spectral representation") {
  const double alpha = 0.6, lambda = 1.7, t = 0.9;
  CHECK(specfun::ml_relaxation(alpha, 1.0, lambda, t) ==
        doctest::Approx(specfun::mittag_leffler(
                            MlParams(alpha, 1.0),
                            -lambda * std::pow(t, alpha)))
            .epsilon(1e-14));
  CHECK(specfun::ml_relaxation(alpha, alpha, lambda, t) ==
        doctest::Approx(std::pow(t, alpha - 1.0) *
                        specfun::mittag_leffler(MlParams(alpha, alpha),
                                                -lambda * std::pow(t, alpha)))
            .epsilon(1e-14));

  // K_alpha integrates e^{-rt} to E_alpha(-t^alpha). Substituting r = e^u
  // turns the integral into a rapidly decaying two-sided one.
  for (double a : {0.3, 0.5, 0.7}) {
    for (double tt : {0.5, 1.0, 4.0}) {
      auto f = [a, tt](double u) {
        const double r = std::exp(u);
        return std::exp(-r * tt) * specfun::ml_spectral_density(a, r) * r;
      };
      // Lower limit -60: the r^alpha weight near r = 0 still holds ~5e-6 of
      // the integral at u = -40 for alpha = 0.3.
      const double num = oracles::simpson(f, -60.0, 40.0, 5000);
      const double want =
          specfun::mittag_leffler(MlParams(a, 1.0), -std::pow(tt, a));
      CHECK(rel_err(num, want) < 1e-6);
    }
  }
  // Spectral density is a probability density in r.
  auto mass = [](double u) {
    const double r = std::exp(u);
    return specfun::ml_spectral_density(0.5, r) * r;
  };
  CHECK(oracles::simpson(mass, -44.0, 44.0, 6000) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("wright function frozen values, series route") {
  // Expected values computed with mpmath at 120 significant digits.
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.8), 2.0),
                0.1328848004390096635126) < 1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.5), 3.0),
                0.05946514461181468576551) < 1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.4), 1.0),
                0.4102335940438268201578) < 1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.4), 0.5),
                0.5466638813296958514222) < 1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.45), 2.0),
                0.1959129898381057120591) < 1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.9), 0.5),
                0.2800417420873658073333) < 1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(2.0 / 3.0), 5.0),
                1.145657052115274501979e-8) < 1e-9);
}

TEST_CASE("wright function frozen values, steepest descent route") {
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.6), 12.0),
                5.499808664343233039521e-41) < 1e-7);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.9), 2.0),
                7.819366916221751693385e-17) < 1e-7);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.75), 5.62341325190349080395),
                5.28016500933905347591e-46) < 1e-7);
}

TEST_CASE("wright series route matches the independent oracle") {
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.35), 1.4),
                static_cast<double>(oracles::wright_series(0.35, 1.4L))) <
        1e-12);
  CHECK(rel_err(specfun::wright_m(WrightOrder(0.55), 0.9),
                static_cast<double>(oracles::wright_series(0.55, 0.9L))) <
        1e-12);
}

TEST_CASE("wright function gaussian specialization") {
  // M_{1/2}(z) = exp(-z^2/4)/sqrt(pi); the implementation must reproduce it
  // through the generic routes, no shortcut.
  const WrightOrder half(0.5);
  for (double z : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const double want = std::exp(-0.25 * z * z) / std::sqrt(M_PI);
    CHECK(rel_err(specfun::wright_m(half, z), want) < 1e-10);
  }
}

TEST_CASE("wright auxiliary function and self-similar density") {
  const WrightOrder o(0.7);
  for (double z : {0.3, 1.1, 2.4}) {
    CHECK(specfun::wright_f(o, z) ==
          doctest::Approx(0.7 * z * specfun::wright_m(o, z)).epsilon(1e-14));
  }
  const double x = 1.3, t = 2.7;
  const double s = std::pow(t, -0.7);
  CHECK(specfun::wright_m_density(o, x, t) ==
        doctest::Approx(s * specfun::wright_m(o, x * s)).epsilon(1e-14));
  CHECK(specfun::wright_m_density(o, x, 1.0) ==
        doctest::Approx(specfun::wright_m(o, x)).epsilon(1e-14));
}

TEST_CASE("wright moments match direct integration") {
  for (double nu : {0.5, 0.8}) {
    const WrightOrder o(nu);
    for (double delta : {0.0, 1.0, 2.0}) {
      const double want = std::tgamma(delta + 1.0) /
                          std::tgamma(nu * delta + 1.0);
      CHECK(specfun::wright_m_moment(o, delta) ==
            doctest::Approx(want).epsilon(1e-14));
      auto f = [&o, delta](double r) {
        return std::pow(r, delta) * specfun::wright_m(o, r);
      };
      // M_nu decays like exp(-c z^{1/(1-nu)}), so a finite window suffices.
      const double num = oracles::simpson(f, 1e-9, 60.0, 6000);
      CHECK(rel_err(num, want) < 1e-5);
    }
  }
}

TEST_CASE("special function domain errors") {
  CHECK_THROWS_AS(MlParams(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(MlParams(-0.5), DomainError);
  CHECK_THROWS_AS(specfun::mittag_leffler_ray(1.3, {-1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(specfun::ml_relaxation(1.2, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::ml_relaxation(0.5, 1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::ml_spectral_density(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::ml_spectral_density(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(WrightOrder(0.0), DomainError);
  CHECK_THROWS_AS(WrightOrder(1.0), DomainError);
  CHECK_THROWS_AS(specfun::wright_m(WrightOrder(0.5), -0.1), DomainError);
  CHECK_THROWS_AS(specfun::wright_m_density(WrightOrder(0.5), 1.0, 0.0),
                  DomainError);
  CHECK_THROWS_AS(specfun::wright_m_moment(WrightOrder(0.5), -1.0),
                  DomainError);
}
