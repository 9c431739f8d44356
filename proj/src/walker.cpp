#include "stfd/walker.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "stfd/sampling.hpp"

namespace stfd::walker {

WalkConfig::WalkConfig(subordination::DiffusionParams p, double tau_star_,
                       std::uint64_t n_steps_, std::uint64_t seed_,
                       std::uint64_t trajectory_id_)
    : params(p),
      tau_star(tau_star_),
      n_steps(n_steps_),
      seed(seed_),
      trajectory_id(trajectory_id_) {
  if (!std::isfinite(tau_star) || !(tau_star > 0.0))
    throw DomainError("tau_star must be > 0");
  if (n_steps < 1) throw DomainError("n_steps must be >= 1");
}

double WalkConfig::tau() const {
  return std::pow(tau_star, 1.0 / params.beta);
}

double WalkConfig::h() const { return std::pow(tau_star, 1.0 / params.alpha); }

double StepFunction::operator()(double t) const {
  if (knots.empty()) throw DomainError("empty step function");
  if (t < knots.front()) return values.front();
  const auto it = std::upper_bound(knots.begin(), knots.end(), t);
  return values[static_cast<std::size_t>(it - knots.begin()) - 1];
}

WalkPath simulate_walk(const WalkConfig& cfg) {
  sampling::RngStream rng(cfg.seed, cfg.trajectory_id);
  const double tau = cfg.tau();
  const double h = cfg.h();
  const double beta = cfg.params.beta;
  const stable::StableParams sp = cfg.params.spatial();
  WalkPath path;
  path.snapshots.reserve(cfg.n_steps + 1);
  path.snapshots.push_back({0, 0.0, 0.0, 0.0});
  double t_bar = 0.0, x_bar = 0.0;
  for (std::uint64_t n = 1; n <= cfg.n_steps; ++n) {
    t_bar += (beta == 1.0) ? tau : tau * sampling::sample_one_sided(beta, rng);
    x_bar += h * sampling::sample_stable(sp, rng);
    path.snapshots.push_back(
        {n, static_cast<double>(n) * cfg.tau_star, t_bar, x_bar});
  }
  return path;
}

StepFunction invert_leading(const WalkPath& path) {
  if (path.snapshots.empty()) throw DomainError("empty path");
  StepFunction f;
  f.knots.reserve(path.snapshots.size());
  f.values.reserve(path.snapshots.size());
  for (const auto& s : path.snapshots) {
    f.knots.push_back(s.t_bar);
    f.values.push_back(s.t_star);
  }
  return f;
}

std::optional<double> sample_position_at(const WalkPath& path, double t_obs) {
  if (path.snapshots.empty()) throw DomainError("empty path");
  if (!(t_obs >= 0.0)) throw DomainError("t_obs must be >= 0");
  if (t_obs > path.snapshots.back().t_bar) return std::nullopt;
  const auto it = std::upper_bound(
      path.snapshots.begin(), path.snapshots.end(), t_obs,
      [](double t, const Snapshot& s) { return t < s.t_bar; });
  return (it - 1)->x_bar;
}

WalkConfig refine(const WalkConfig& cfg, std::uint64_t factor) {
  if (factor < 1) throw DomainError("refinement factor must be >= 1");
  if (cfg.n_steps > std::numeric_limits<std::uint64_t>::max() / factor)
    throw DomainError("refined n_steps overflows");
  WalkConfig out = cfg;
  out.tau_star = cfg.tau_star / factor;
  out.n_steps = cfg.n_steps * factor;
  return out;
}

namespace {

// Grow one trajectory until physical time passes t_obs; the position held
// at the last renewal <= t_obs is the exact marginal sample. The step cap
// only guards against misconfigured horizons (expected step count is about
// t_obs^beta / tau_star).
double position_at(const subordination::DiffusionParams& params,
                   double tau_star, double t_obs, std::uint64_t seed,
                   std::uint64_t trajectory_id) {
  sampling::RngStream rng(seed, trajectory_id);
  const double tau = std::pow(tau_star, 1.0 / params.beta);
  const double h = std::pow(tau_star, 1.0 / params.alpha);
  const double beta = params.beta;
  const stable::StableParams sp = params.spatial();
  constexpr std::uint64_t kMaxSteps = 100000000;
  double t_bar = 0.0, x_bar = 0.0;
  for (std::uint64_t n = 1; n <= kMaxSteps; ++n) {
    const double wait =
        (beta == 1.0) ? tau : tau * sampling::sample_one_sided(beta, rng);
    const double jump = h * sampling::sample_stable(sp, rng);
    if (t_bar + wait > t_obs) return x_bar;
    t_bar += wait;
    x_bar += jump;
  }
  throw ConvergenceError("trajectory failed to reach t_obs within step cap",
                         t_obs - t_bar, x_bar);
}

}  // namespace

std::vector<double> ensemble_positions(
    const subordination::DiffusionParams& params, double tau_star,
    double t_obs, std::size_t n_paths, std::uint64_t seed, unsigned workers) {
  if (!std::isfinite(tau_star) || !(tau_star > 0.0))
    throw DomainError("tau_star must be > 0");
  if (!(t_obs >= 0.0)) throw DomainError("t_obs must be >= 0");
  if (n_paths == 0) throw DomainError("n_paths must be >= 1");
  std::vector<double> out(n_paths, 0.0);
  if (t_obs == 0.0) return out;
  unsigned hw = workers;
  if (hw == 0) hw = std::max(1u, std::thread::hardware_concurrency());
  hw = static_cast<unsigned>(
      std::min<std::size_t>(hw, n_paths));
  if (hw <= 1) {
    for (std::size_t id = 0; id < n_paths; ++id)
      out[id] = position_at(params, tau_star, t_obs, seed, id);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (unsigned wk = 0; wk < hw; ++wk) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t id = cursor.fetch_add(1);
        if (id >= out.size()) return;
        try {
          out[id] = position_at(params, tau_star, t_obs, seed, id);
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
  return out;
}

}  // namespace stfd::walker
