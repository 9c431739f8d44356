#include "stfd/subordination.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "stfd/gammafn.hpp"
#include "stfd/quadrature.hpp"
#include "stfd/specfun.hpp"

namespace stfd::subordination {

DiffusionParams::DiffusionParams(double a, double th, double b)
    : alpha(a), theta(th), beta(b) {
  stable::validate_params(a, th);  // throws outside the diamond
  if (!std::isfinite(b) || !(b > 0.0) || b > 1.0)
    throw DomainError("beta must lie in (0, 1]");
}

double parent_density(const DiffusionParams& p, double x, double t_star) {
  if (!(t_star > 0.0)) throw DomainError("t_star must be > 0");
  return stable::stable_pdf_scaled(p.spatial(), x, t_star);
}

double directing_density(double beta, double t_star, double t) {
  if (!std::isfinite(beta) || !(beta > 0.0) || beta > 1.0)
    throw DomainError("beta must lie in (0, 1]");
  if (beta == 1.0)
    throw DiracLimitError(
        "beta = 1 directing law is the pulse delta(t* - t), not a density");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (t_star < 0.0) return 0.0;  // off the support
  const specfun::WrightOrder o(beta);
  return specfun::wright_m_density(o, t_star, t);
}

double leading_density(double beta, double t, double t_star) {
  if (!std::isfinite(beta) || !(beta > 0.0) || !(beta < 1.0))
    throw DomainError("leading density requires 0 < beta < 1");
  if (!(t_star > 0.0)) throw DomainError("t_star must be > 0");
  if (t <= 0.0) return 0.0;  // one-sided support
  return stable::stable_pdf_scaled(stable::StableParams(beta, -beta), t,
                                   t_star);
}

namespace {

// Log-argument screen for M_beta(w): the saddle height g0 = -sigma(1-nu)/nu,
// sigma = (nu w)^(1/(1-nu)), decreases monotonically in w; below -46 nats
// the directing factor cannot move the subordination integral at the 1e-6
// relative target, so the integrand returns 0 without evaluating M.
bool mwright_negligible(double nu, double w) {
  if (!(w > 0.0)) return false;
  const double lnsig = (std::log(nu) + std::log(w)) / (1.0 - nu);
  if (lnsig > 700.0) return true;
  const double g0 = -std::exp(lnsig) * (1.0 - nu) / nu;
  return g0 < -46.0;
}

double green_quadrature(const DiffusionParams& p, double x, double t,
                        const GreenOptions& opt) {
  const double ax = std::fabs(x);
  if (ax == 0.0 && p.alpha <= 1.0)
    throw DomainError(
        "u(0, t) diverges for alpha <= 1 with beta < 1: the subordination "
        "integral has a non-integrable t* -> 0 boundary layer");
  const stable::StableParams sp{p.alpha, (x >= 0.0) ? p.theta : -p.theta};
  const double beta = p.beta;
  const double ut = beta * std::log(t);
  // Upper cutoff where the directing density's saddle height crosses -51
  // nats; the +1 margin keeps the last panel fully inside the screen.
  const double u_hi =
      ut + (1.0 - beta) * std::log(51.0 * beta / (1.0 - beta)) -
      std::log(beta) + 1.0;
  double u_lo;
  double ux = 0.0;
  if (ax > 0.0) {
    ux = p.alpha * std::log(ax);
    u_lo = std::min(ux, ut) - 35.0;
  } else {
    // alpha > 1: integrand ~ e^{u(1-1/alpha)} near the lower end.
    u_lo = ut - 35.0 * p.alpha / (p.alpha - 1.0);
  }
  if (u_lo >= u_hi) u_lo = u_hi - 40.0;
  const specfun::WrightOrder order(beta);
  const double tq = std::pow(t, -beta);
  auto f = [&](double u) {
    const double w = std::exp(u - ut);
    if (mwright_negligible(beta, w)) return 0.0;
    const double ts = std::exp(u);
    const double q = tq * specfun::wright_m(order, w);
    if (q == 0.0) return 0.0;
    const double parent = stable::stable_pdf_scaled(sp, ax, ts);
    return parent * q * ts;  // e^u from dt* = t* du
  };
  std::vector<double> knots;
  auto push = [&](double u) {
    if (u > u_lo && u < u_hi) knots.push_back(u);
  };
  knots.push_back(u_lo);
  knots.push_back(u_hi);
  for (double d : {0.0, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    push(ut - d);
    push(ut + d);
    if (ax > 0.0) {
      push(ux - d);
      push(ux + d);
    }
  }
  if (beta > 0.95) {
    // Near beta = 1 the directing density concentrates at w = 1.
    for (double d : {-0.3, -0.1, -0.03, 0.0, 0.03, 0.1, 0.3}) push(ut + d);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  QuadOptions qopt;
  qopt.abs_tol = 1e-300;
  qopt.rel_tol = 0.1 * opt.rel_tol;
  qopt.max_intervals = 4000;
  return std::max(0.0, integrate(f, knots, qopt).value);
}

}  // namespace

double green_function(const DiffusionParams& p, double x, double t,
                      const GreenOptions& opt) {
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (p.beta == 1.0) return stable::stable_pdf_scaled(p.spatial(), x, t);
  if (!opt.force_quadrature && p.alpha == 2.0) {
    const specfun::WrightOrder o(p.beta / 2.0);
    return 0.5 * specfun::wright_m_density(o, std::fabs(x), t);
  }
  return green_quadrature(p, x, t, opt);
}

std::complex<double> green_cf(const DiffusionParams& p, double kappa,
                              double t) {
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (!std::isfinite(kappa)) throw DomainError("kappa must be finite");
  if (kappa == 0.0) return {1.0, 0.0};
  const double mag = std::pow(std::fabs(kappa), p.alpha) * std::pow(t, p.beta);
  if (p.theta == 0.0)
    return {specfun::mittag_leffler(specfun::MlParams(p.beta), -mag), 0.0};
  const double sgn = (kappa > 0.0) ? 1.0 : -1.0;
  const std::complex<double> z =
      -mag * std::complex<double>(cospi(sgn * p.theta / 2.0),
                                  sinpi(sgn * p.theta / 2.0));
  return specfun::mittag_leffler_ray(p.beta, z);
}

double drift_green(double beta, double x, double t) {
  if (!std::isfinite(beta) || !(beta > 0.0) || beta > 1.0)
    throw DomainError("beta must lie in (0, 1]");
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (beta == 1.0)
    throw DiracLimitError("beta = 1 drift is the pulse delta(x - t)");
  if (x < 0.0) return 0.0;
  const specfun::WrightOrder o(beta);
  return specfun::wright_m_density(o, x, t);
}

double DensityGrid::trapezoid_mass() const {
  double m = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i)
    m += 0.5 * (us[i] + us[i - 1]) * (xs[i] - xs[i - 1]);
  return m;
}

double DensityGrid::total_mass() const { return trapezoid_mass() + tail_mass; }

double mwright_tail(double nu, double z0) {
  if (!std::isfinite(nu) || !(nu > 0.0) || !(nu < 1.0))
    throw DomainError("order must lie in (0, 1)");
  if (!(z0 >= 0.0)) throw DomainError("z0 must be >= 0");
  const specfun::WrightOrder o(nu);
  // Cutoff where the saddle height falls 60 nats under zero.
  const double sig = 60.0 * nu / (1.0 - nu);
  const double whi = std::pow(sig, 1.0 - nu) / nu + z0 + 10.0;
  auto f = [&](double w) { return specfun::wright_m(o, w); };
  std::vector<double> knots{z0};
  double step = std::max(0.5, z0 * 0.1);
  for (double w = z0 + step; w < whi; w += std::max(step, 0.2 * w - 0.2 * z0))
    knots.push_back(w);
  knots.push_back(whi);
  QuadOptions qopt;
  qopt.abs_tol = 1e-14;
  qopt.rel_tol = 1e-9;
  return integrate(f, knots, qopt).value;
}

double green_tail_mass(const DiffusionParams& p, double t, double edge) {
  if (!(t > 0.0)) throw DomainError("t must be > 0");
  if (!std::isfinite(edge) || edge == 0.0)
    throw DomainError("tail edge must be nonzero");
  if (p.alpha == 2.0) {
    if (p.beta == 1.0)
      return 0.5 * std::erfc(std::fabs(edge) / (2.0 * std::sqrt(t)));
    const double nu = p.beta / 2.0;
    return 0.5 * mwright_tail(nu, std::fabs(edge) * std::pow(t, -nu));
  }
  const double mean_tstar = std::pow(t, p.beta) / std::tgamma(1.0 + p.beta);
  return stable::stable_tail(p.spatial(), edge) * std::fabs(edge) / p.alpha *
         mean_tstar;
}

DensityGrid tabulate_green(const DiffusionParams& p, double t,
                           const std::vector<double>& xs,
                           const GreenOptions& opt) {
  if (xs.size() < 2) throw DomainError("grid needs at least two points");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]))
      throw DomainError("grid abscissae must be strictly increasing");
  DensityGrid g;
  g.t = t;
  g.xs = xs;
  g.us.assign(xs.size(), 0.0);
  g.alpha = p.alpha;
  g.theta = p.theta;
  g.beta = p.beta;
  g.rel_tol = opt.rel_tol;

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(hw, xs.size()));
  std::exception_ptr first_error;
  if (workers <= 1 || xs.size() < 16) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      g.us[i] = green_function(p, xs[i], t, opt);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> cursor{0};
    std::mutex err_mutex;
    for (unsigned wk = 0; wk < workers; ++wk) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= g.xs.size()) return;
          try {
            g.us[i] = green_function(p, g.xs[i], t, opt);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Declared tail mass beyond the grid edges (one-sided pieces; an edge at
  // or across the origin contributes nothing on that side).
  double tail = 0.0;
  if (xs.back() > 0.0) tail += green_tail_mass(p, t, xs.back());
  if (xs.front() < 0.0) tail += green_tail_mass(p, t, xs.front());
  g.tail_mass = tail;
  return g;
}

}  // namespace stfd::subordination
