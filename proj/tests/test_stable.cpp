#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stfd/errors.hpp"
#include "stfd/stable.hpp"
#include "stfd/quadrature.hpp"

using namespace stfd;
using stable::StableParams;

namespace {

double rel_err(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

double gaussian_pdf(double x) {
  return std::exp(-0.25 * x * x) / (2.0 * std::sqrt(M_PI));
}

double cauchy_pdf(double x) { return 1.0 / (M_PI * (1.0 + x * x)); }

double levy_smirnov_pdf(double x) {
  if (x <= 0.0) return 0.0;
  return std::exp(-0.25 / x) / (2.0 * std::sqrt(M_PI) * std::pow(x, 1.5));
}

}  // namespace

TEST_CASE("parameter diamond validation") {
  CHECK_NOTHROW(StableParams(2.0, 0.0));
  CHECK_NOTHROW(StableParams(0.5, -0.5));
  CHECK_NOTHROW(StableParams(1.5, 0.5));
  CHECK_THROWS_AS(StableParams(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(StableParams(2.1, 0.0), DomainError);
  CHECK_THROWS_AS(StableParams(0.5, 0.6), DomainError);
  CHECK_THROWS_AS(StableParams(1.5, -0.7), DomainError);
  CHECK_THROWS_AS(StableParams(2.0, 0.3), DomainError);
  // Values a hair outside the boundary snap onto it.
  CHECK(StableParams(0.5, 0.5 + 1e-13).theta == doctest::Approx(0.5));
  CHECK(StableParams(2.0, 1e-13).theta == 0.0);
}

TEST_CASE("closed-form densities on an 11-point grid") {
  for (int i = 0; i <= 10; ++i) {
    const double x = -5.0 + i;
    CHECK(stable::stable_pdf(StableParams(2.0, 0.0), x) ==
          doctest::Approx(gaussian_pdf(x)).epsilon(1e-13));
    CHECK(stable::stable_pdf(StableParams(1.0, 0.0), x) ==
          doctest::Approx(cauchy_pdf(x)).epsilon(1e-13));
  }
  for (int i = 0; i <= 10; ++i) {
    const double x = 0.05 + 0.3 * i;
    const double got = stable::stable_pdf(StableParams(0.5, -0.5), x);
    CHECK(got == doctest::Approx(levy_smirnov_pdf(x)).epsilon(1e-13));
    // Support is the positive axis only.
    CHECK(stable::stable_pdf(StableParams(0.5, -0.5), -x) == 0.0);
  }
  // Frozen median of the one-sided alpha=1/2 law: CDF(z) = erfc(1/(2 sqrt z)).
  const double median = 1.099054669158866202;
  CHECK(std::erfc(1.0 / (2.0 * std::sqrt(median))) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("stable density frozen values") {
  // Expected values computed with mpmath (Fourier integral at 60 digits).
  CHECK(rel_err(stable::stable_pdf(StableParams(1.5, 0.0), 2.0),
                0.08453962312613752005681) < 1e-10);
  CHECK(rel_err(stable::stable_pdf(StableParams(1.5, 0.0), 50.0),
                1.707936475343462413047e-5) < 1e-10);
  CHECK(rel_err(stable::stable_pdf(StableParams(1.5, 0.0), 1.0),
                0.2020381596078401303889) < 1e-10);
  CHECK(rel_err(stable::stable_pdf(StableParams(0.8, -0.25), 1.5),
                0.1182867428899426288226) < 1e-10);
  CHECK(rel_err(stable::stable_pdf(StableParams(1.5, -0.5), 0.7),
                0.3433686157974862520271) < 1e-10);
  CHECK(rel_err(stable::stable_pdf(StableParams(0.8, 0.0), 0.05),
                0.358465225181148880282) < 1e-9);
  CHECK(rel_err(stable::stable_pdf(StableParams(0.8, -0.25), 0.3),
                0.3959113021074841537181) < 1e-9);
  CHECK(rel_err(stable::stable_pdf(StableParams(0.5, 0.0), 0.01),
                0.6328912926592531776716) < 1e-7);
  CHECK(rel_err(stable::stable_pdf(StableParams(0.5, 0.0), 0.015),
                0.6284608554459229457591) < 1e-7);
}

TEST_CASE("stable density matches the independent inversion oracle") {
  struct Pt {
    double alpha, theta, x, tol;
  };
  const Pt pts[] = {
      {0.8, 0.0, 1.2, 2e-8},
      {1.5, 0.0, 2.0, 2e-8},
      {0.7, -0.3, 0.6, 5e-8},
      {1.5, -0.5, 0.7, 2e-8},
  };
  for (const auto& q : pts) {
    const double got = stable::stable_pdf(StableParams(q.alpha, q.theta), q.x);
    const double want = oracles::stable_cf_inversion(q.alpha, q.theta, q.x);
    CHECK(rel_err(got, want) < q.tol);
  }
}

TEST_CASE("mirror rule relates the two half lines") {
  for (double a : {0.7, 1.4}) {
    for (double th : {-0.3, 0.0, 0.2}) {
      if (std::fabs(th) > std::min(a, 2.0 - a)) continue;
      for (double x : {0.4, 1.7}) {
        CHECK(stable::stable_pdf(StableParams(a, th), -x) ==
              doctest::Approx(stable::stable_pdf(StableParams(a, -th), x))
                  .epsilon(1e-14));
      }
    }
  }
  // Symmetric laws are even.
  CHECK(stable::stable_pdf(StableParams(0.8, 0.0), -1.3) ==
        doctest::Approx(stable::stable_pdf(StableParams(0.8, 0.0), 1.3))
            .epsilon(1e-14));
}

TEST_CASE("characteristic function anchors") {
  using cplx = std::complex<double>;
  CHECK(std::abs(stable::stable_cf(StableParams(0.5, -0.5), 1.0) -
                 std::exp(-std::exp(cplx(0.0, -M_PI / 4.0)))) < 1e-14);
  for (double k : {-2.0, 0.5, 3.0}) {
    CHECK(std::abs(stable::stable_cf(StableParams(2.0, 0.0), k) -
                   cplx(std::exp(-k * k), 0.0)) < 1e-14);
  }
  CHECK(stable::stable_cf(StableParams(1.3, 0.2), 0.0) == cplx(1.0, 0.0));
  // Conjugate symmetry in kappa.
  const cplx plus = stable::stable_cf(StableParams(1.3, 0.2), 1.7);
  const cplx minus = stable::stable_cf(StableParams(1.3, 0.2), -1.7);
  CHECK(plus.real() == doctest::Approx(minus.real()).epsilon(1e-15));
  CHECK(plus.imag() == doctest::Approx(-minus.imag()).epsilon(1e-15));
}

TEST_CASE("fourier transform of the density reproduces the cf") {
  // One shared density tabulation per parameter pair serves every kappa.
  struct Cfg {
    double alpha, theta, cut;
    int n;
  };
  for (const Cfg& c : {Cfg{1.5, 0.0, 80.0, 40000}, Cfg{0.8, 0.0, 200.0, 60000}}) {
    const StableParams p(c.alpha, c.theta);
    std::vector<double> xs(c.n + 1), fs(c.n + 1);
    for (int i = 0; i <= c.n; ++i) {
      xs[i] = -c.cut + 2.0 * c.cut * i / c.n;
      fs[i] = stable::stable_pdf(p, xs[i]);
    }
    for (double kappa : {-5.0, -1.0, 0.5, 2.0, 5.0}) {
      std::complex<double> acc(0.0, 0.0);
      for (int i = 0; i < c.n; ++i) {
        const double xm = 0.5 * (xs[i] + xs[i + 1]);
        const double fm = stable::stable_pdf(p, xm);
        const double h = xs[i + 1] - xs[i];
        // Simpson on the cell, e^{+i kappa x} weight.
        acc += (h / 6.0) *
               (fs[i] * std::exp(std::complex<double>(0.0, kappa * xs[i])) +
                4.0 * fm * std::exp(std::complex<double>(0.0, kappa * xm)) +
                fs[i + 1] *
                    std::exp(std::complex<double>(0.0, kappa * xs[i + 1])));
      }
      CHECK(std::abs(acc - stable::stable_cf(p, kappa)) < 1e-4);
    }
  }
}

TEST_CASE("density integrates to one with tail completion") {
  struct Cfg {
    double alpha, theta, cut;
  };
  const Cfg cfgs[] = {{2.0, 0.0, 30.0},     {1.5, 0.0, 100.0},
                      {1.5, -0.5, 100.0},   {1.0, 0.0, 1e4},
                      {0.8, -0.8, 1e4},     {0.5, -0.5, 1e6}};
  for (const Cfg& c : cfgs) {
    const StableParams p(c.alpha, c.theta);
    QuadOptions opt;
    opt.rel_tol = 1e-8;
    opt.abs_tol = 1e-12;
    opt.max_intervals = 20000;
    auto f = [&p](double x) { return stable::stable_pdf(p, x); };
    // Geometric knots resolve both the central peak and the slow tails.
    std::vector<double> knots{0.0};
    for (double g = 1e-3; g < c.cut; g *= 2.0) knots.push_back(g);
    knots.push_back(c.cut);
    double mass = integrate(f, knots, opt).value;
    for (double& k : knots) k = -k;
    std::sort(knots.begin(), knots.end());
    mass += integrate(f, knots, opt).value;
    // One-term power tails complete the truncated mass (alpha=2 decays
    // faster than any power; its residual beyond 30 is below 1e-12).
    if (c.alpha < 2.0) {
      mass += stable::stable_tail(p, c.cut) * c.cut / c.alpha;
      mass += stable::stable_tail(p, -c.cut) * c.cut / c.alpha;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("density is unimodal for non-extremal parameters") {
  struct Cfg {
    double alpha, theta;
  };
  for (const Cfg& c : {Cfg{2.0, 0.0}, Cfg{1.5, -0.5}, Cfg{0.8, 0.3},
                       Cfg{0.6, 0.0}, Cfg{1.2, -0.6}}) {
    const StableParams p(c.alpha, c.theta);
    const int n = 2001;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = stable::stable_pdf(p, -20.0 + 40.0 * i / (n - 1));
    int maxima = 0;
    for (int i = 1; i + 1 < n; ++i)
      if (v[i] > v[i - 1] && v[i] >= v[i + 1]) ++maxima;
    CHECK(maxima == 1);
  }
}

TEST_CASE("extremal wright bridge across representations") {
  for (double alpha : {0.5, 0.75, 1.5, 2.0}) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double bridge = stable::extremal_from_wright(alpha, x);
      double direct;
      if (alpha < 1.0)
        direct = stable::stable_pdf(StableParams(alpha, -alpha), x);
      else
        direct = stable::stable_pdf(StableParams(alpha, alpha - 2.0), x);
      CHECK(rel_err(direct, bridge) < 1e-7);
    }
  }
  CHECK_THROWS_AS(stable::extremal_from_wright(1.0, 1.0), DomainError);
}

TEST_CASE("one-sided integral frozen values") {
  // Expected values computed with mpmath at 60 digits.
  CHECK(rel_err(stable::detail::zolotarev_extremal(0.7, 2.5),
                0.07055857022155812041058) < 1e-10);
  CHECK(rel_err(stable::detail::zolotarev_extremal(0.7, 0.1),
                3.621736607138973242441e-11) < 1e-9);
  CHECK(rel_err(stable::detail::zolotarev_extremal(0.85, 0.25),
                1.446902586741726490946e-65) < 1e-8);
  CHECK(rel_err(stable::detail::zolotarev_extremal(0.9, 1.2),
                0.4308306847892023402142) < 1e-10);
  // At beta = 1/2 the integral reduces to the explicit density.
  for (double x : {0.3, 1.0, 4.0}) {
    CHECK(rel_err(stable::detail::zolotarev_extremal(0.5, x),
                  levy_smirnov_pdf(x)) < 1e-10);
  }
  CHECK(stable::detail::zolotarev_extremal(0.7, 0.0) == 0.0);
}

TEST_CASE("reciprocity between reciprocal orders") {
  // x^{-(alpha+1)} L^theta_{1/alpha}(x^{-alpha}) = L^{theta*}_alpha(x) with
  // theta* = alpha (theta + 1) - 1, for alpha in (0, 1].
  for (double alpha : {0.5, 0.75, 1.0}) {
    const double inv = 1.0 / alpha;
    // At alpha = 1 the admissible band reaches |theta| = 1, but those corners
    // are the degenerate drift laws; stay strictly inside.
    const double cap = std::min(2.0 - inv, 0.7);
    for (double theta : {-cap, 0.0, cap}) {
      const double theta_star = alpha * (theta + 1.0) - 1.0;
      for (double x = 0.2; x <= 3.0; x += 0.35) {
        const double lhs =
            std::pow(x, -(alpha + 1.0)) *
            stable::stable_pdf(StableParams(inv, theta), std::pow(x, -alpha));
        const double rhs =
            stable::stable_pdf(StableParams(alpha, theta_star), x);
        CHECK(std::fabs(lhs - rhs) <
              1e-6 * std::max(1.0, std::fabs(rhs)));
      }
      if (cap == 0.0) break;
    }
  }
}

TEST_CASE("power tail dominates the density far out") {
  // The x < 0 side of theta = alpha-2 is the fat one; the ratio approaches
  // 1 at the rate x^-alpha (the second tail term vanishes here, so faster).
  const StableParams p(1.5, -0.5);
  CHECK(rel_err(stable::stable_pdf(p, -80.0), stable::stable_tail(p, -80.0)) <
        1e-4);
  const StableParams q(0.8, 0.0);
  CHECK(rel_err(stable::stable_pdf(q, 1e4), stable::stable_tail(q, 1e4)) <
        1e-3);
  // Exponentially thin extremal sides carry no power tail.
  CHECK(stable::stable_tail(StableParams(0.5, -0.5), -3.0) == 0.0);
  CHECK(stable::stable_tail(StableParams(1.5, -0.5), -3.0) > 0.0);
  CHECK_THROWS_AS(stable::stable_tail(StableParams(2.0, 0.0), 3.0),
                  DomainError);
  CHECK_THROWS_AS(stable::stable_tail(StableParams(1.5, 0.0), 0.0),
                  DomainError);
}

TEST_CASE("self-similar rescaling") {
  const StableParams p(1.5, -0.3);
  const double x = 1.7, t = 3.2;
  const double s = std::pow(t, -1.0 / 1.5);
  CHECK(stable::stable_pdf_scaled(p, x, t) ==
        doctest::Approx(s * stable::stable_pdf(p, x * s)).epsilon(1e-14));
  CHECK(stable::stable_pdf_scaled(p, x, 1.0) ==
        doctest::Approx(stable::stable_pdf(p, x)).epsilon(1e-14));
  CHECK_THROWS_AS(stable::stable_pdf_scaled(p, x, 0.0), DomainError);
}

TEST_CASE("regime classification is consistent with evaluation") {
  using stable::StableRegime;
  CHECK(stable::classify(StableParams(2.0, 0.0), 1.0) ==
        StableRegime::gaussian);
  CHECK(stable::classify(StableParams(1.0, 0.0), 5.0) ==
        StableRegime::cauchy_family);
  CHECK(stable::classify(StableParams(1.0, 1.0), 0.5) ==
        StableRegime::dirac_limit);
  CHECK(stable::classify(StableParams(0.5, -0.5), 1.0) ==
        StableRegime::levy_smirnov_pair);
  CHECK(stable::classify(StableParams(0.8, -0.8), 1.0) ==
        StableRegime::extremal_integral);
  CHECK(stable::classify(StableParams(0.8, 0.0), 1.2) ==
        StableRegime::series_small_alpha);
  CHECK(stable::classify(StableParams(1.5, 0.0), 2.0) ==
        StableRegime::series_large_alpha);
  CHECK(stable::classify(StableParams(1.5, 0.0), 600.0) ==
        StableRegime::tail_asymptotic);
  CHECK(stable::classify(StableParams(0.5, 0.0), 0.01) ==
        StableRegime::cf_inversion);
  CHECK(stable::classify(StableParams(1.0 + 5e-5, 0.2), 1.0) ==
        StableRegime::alpha_one_skewed_unsupported);
  CHECK(std::string(regime_name(StableRegime::gaussian)) == "gaussian");
  CHECK(std::string(regime_name(StableRegime::cf_inversion)) ==
        "cf_inversion");

  // The refusal band and the dirac limit surface as typed errors.
  CHECK_THROWS_AS(stable::stable_pdf(StableParams(1.0, 1.0), 0.5),
                  DiracLimitError);
  CHECK_THROWS_AS(stable::stable_pdf(StableParams(1.0, -1.0), 0.5),
                  DiracLimitError);
  CHECK_THROWS_AS(stable::stable_pdf(StableParams(1.0 + 5e-5, 0.2), 1.0),
                  DomainError);
  CHECK_NOTHROW(stable::stable_pdf(StableParams(1.0 + 5e-5, 0.0), 1.0));
}

TEST_CASE("route predictors gate the series safely") {
  using namespace stable::detail;
  // Accepted points must agree with the inversion oracle tightly.
  CHECK(series_small_ok(0.8, 0.0, 1.2));
  CHECK(series_large_ok(1.5, 0.0, 2.0));
  CHECK_FALSE(series_small_ok(0.5, 0.0, 0.01));  // hopeless cancellation
  CHECK_FALSE(series_large_ok(1.5, 0.0, 600.0)); // past the usable radius
  // central route: first term alone is the exact x = 0 value.
  CHECK(central_asymptotic_ok(0.8, 0.0, 0.05));
  const double at_zero = stable::stable_pdf(StableParams(0.8, 0.0), 0.0);
  CHECK(rel_err(at_zero,
                std::tgamma(1.0 + 1.0 / 0.8) * std::cos(0.0) / M_PI) < 1e-9);
}
