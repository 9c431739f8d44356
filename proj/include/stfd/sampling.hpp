#pragma once

#include <cstdint>
#include <vector>

#include "stfd/errors.hpp"
#include "stfd/stable.hpp"

namespace stfd::sampling {

// Small-state deterministic generator (PCG XSH-RR 64/32): 64-bit seed,
// odd-increment sub-streams selected by stream_id, bit-identical sequences
// across platforms. One stream must not be shared between threads; create
// one per trajectory instead.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint32_t next_u32();

  // Uniform double on the open interval (0,1) built from 53 random bits;
  // never returns 0 or 1, so log(u) and tan-based maps stay finite.
  double next_open01();

  std::uint64_t stream_id() const { return stream_; }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t stream_;
};

// The sampler's native skewness/scale pair for a Feller (alpha, theta).
struct CmsParams {
  double alpha;
  double beta_skew;  // in [-1, 1]
  double scale;      // > 0
};

// Conversion pinned by the characteristic-function Monte Carlo tests:
// beta_skew = -tan(theta pi/2)/tan(alpha pi/2), scale = cos(theta pi/2)^(1/alpha).
// Requires alpha != 1 or theta = 0; the alpha=1 skewed family is handled by
// an exact closed-form branch inside sample_stable instead.
CmsParams feller_to_cms(const stable::StableParams& p);

// One deviate with density L_alpha^theta. Consumes exactly two uniforms for
// every parameter set, so mixed-parameter streams stay aligned.
double sample_stable(const stable::StableParams& p, RngStream& rng);

// One positive deviate with density L_beta^{-beta}, Laplace transform
// exp(-s^beta); 0 < beta < 1.
double sample_one_sided(double beta, RngStream& rng);

// n jumps h*X_k with h = tau_star^(1/alpha).
std::vector<double> sample_scaled_increments(const stable::StableParams& p,
                                             double tau_star, std::size_t n,
                                             RngStream& rng);

// n waiting increments tau*T_k with tau = tau_star^(1/beta).
std::vector<double> sample_scaled_increments(double beta, double tau_star,
                                             std::size_t n, RngStream& rng);

}  // namespace stfd::sampling
