#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stfd/subordination.hpp"

namespace stfd::walker {

// One subordinated random walk: operational-time grid n tau_star, physical
// waiting increments tau T_k (one-sided beta-stable) and spatial jumps
// h X_k (alpha-stable, skewness theta), with tau = tau_star^(1/beta) and
// h = tau_star^(1/alpha) so that tau^beta / h^alpha = 1.
struct WalkConfig {
  subordination::DiffusionParams params;
  double tau_star;
  std::uint64_t n_steps;
  std::uint64_t seed;
  std::uint64_t trajectory_id;

  WalkConfig(subordination::DiffusionParams p, double tau_star_,
             std::uint64_t n_steps_, std::uint64_t seed_,
             std::uint64_t trajectory_id_ = 0);

  double tau() const;  // physical-time step scale tau_star^(1/beta)
  double h() const;    // spatial jump scale tau_star^(1/alpha)
};

// Joint state after n steps; snapshot 0 is (0, 0, 0, 0).
struct Snapshot {
  std::uint64_t n;
  double t_star;  // n tau_star
  double t_bar;   // cumulated physical time
  double x_bar;   // cumulated position
};

struct WalkPath {
  std::vector<Snapshot> snapshots;
};

// Right-continuous piecewise-constant function: values[i] on
// [knots[i], knots[i+1]), values.back() from knots.back() on, values.front()
// before knots.front().
struct StepFunction {
  std::vector<double> knots;
  std::vector<double> values;
  double operator()(double t) const;
};

// Exact joint snapshots (n tau_star, t_bar_n, x_bar_n) of the subordinated
// process at operational instants. beta = 1 degenerates the waiting times to
// the deterministic drift t_bar_n = n tau_star and consumes no draws for
// them; spatial jumps always consume exactly two uniforms each.
WalkPath simulate_walk(const WalkConfig& cfg);

// Directing process t_*(t): holds n tau_star on [t_bar_n, t_bar_{n+1}).
// Horizontal waiting segments of the leading walk become vertical segments
// here and vice versa.
StepFunction invert_leading(const WalkPath& path);

// Position held since the last physical jump instant <= t_obs, or nullopt
// when t_obs lies beyond the simulated horizon (censored observation).
std::optional<double> sample_position_at(const WalkPath& path, double t_obs);

// Same operational horizon n_steps * tau_star at a finer step:
// tau_star / factor and n_steps * factor. Reveals finer path detail while
// the covered horizon is unchanged.
WalkConfig refine(const WalkConfig& cfg, std::uint64_t factor);

// Positions x(t_obs) over trajectory_id = 0 .. n_paths-1, one RNG stream per
// trajectory. Each path is grown until its physical time passes t_obs, never
// truncated at a fixed step count, so the marginal law is exact. Results are
// identical for every worker count; workers = 0 picks the hardware count.
std::vector<double> ensemble_positions(
    const subordination::DiffusionParams& params, double tau_star,
    double t_obs, std::size_t n_paths, std::uint64_t seed,
    unsigned workers = 0);

}  // namespace stfd::walker
