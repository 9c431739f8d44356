#include "stfd/sampling.hpp"

#include <cmath>

#include "stfd/gammafn.hpp"

namespace stfd::sampling {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(0u), inc_((stream_id << 1u) | 1u), stream_(stream_id) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t RngStream::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  const auto xorshifted =
      static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double RngStream::next_open01() {
  const std::uint64_t a = next_u32();
  const std::uint64_t b = next_u32();
  const std::uint64_t v = (a << 21u) | (b >> 11u);  // 53 bits
  return (static_cast<double>(v) + 0.5) * 0x1.0p-53;
}

CmsParams feller_to_cms(const stable::StableParams& p) {
  if (p.alpha == 1.0 && p.theta != 0.0)
    throw DomainError(
        "alpha = 1 skewed laws use the closed-form branch of sample_stable");
  const double b =
      (p.theta == 0.0)
          ? 0.0
          : -std::tan(p.theta * M_PI / 2.0) / std::tan(p.alpha * M_PI / 2.0);
  const double scale = std::pow(cospi(p.theta / 2.0), 1.0 / p.alpha);
  return {p.alpha, b, scale};
}

double sample_stable(const stable::StableParams& p, RngStream& rng) {
  const double u1 = rng.next_open01();
  const double u2 = rng.next_open01();
  const double v = M_PI * (u1 - 0.5);  // uniform on (-pi/2, pi/2)
  const double w = -std::log(u2);      // unit exponential
  const double a = p.alpha;
  const double tt = p.theta * M_PI / 2.0;
  if (a == 1.0) {
    // theta = +-1 is the degenerate drift at x = -+1; |theta| < 1 is the
    // Cauchy shifted by -sin(theta pi/2) and scaled by cos(theta pi/2),
    // sampled exactly. Both consume the same two uniforms as the general
    // branch to preserve stream alignment.
    if (p.theta == 1.0) return -1.0;
    if (p.theta == -1.0) return 1.0;
    return -std::sin(tt) + std::cos(tt) * std::tan(v);
  }
  // Feller-calibrated composition: applying the scale cos(theta pi/2)^(1/a)
  // to the native construction cancels its (1 + b^2 tan^2(pi a/2))^(1/(2a))
  // prefactor exactly, leaving a form free of tan(pi a/2) blow-ups near a=1:
  //   X = sin(aV - t~) cos(V)^(-1/a) [cos((1-a)V + t~)/W]^((1-a)/a).
  // The angle sums stay inside (-pi/2, pi/2) on the diamond, so both
  // cosines are positive.
  const double s1 = std::sin(a * v - tt);
  const double c1 = std::cos(v);
  const double c2 = std::cos((1.0 - a) * v + tt);
  return s1 * std::pow(c1, -1.0 / a) * std::pow(c2 / w, (1.0 - a) / a);
}

double sample_one_sided(double beta, RngStream& rng) {
  if (!(beta > 0.0) || !(beta < 1.0))
    throw DomainError("one-sided sampling requires 0 < beta < 1");
  const double u1 = rng.next_open01();
  const double u2 = rng.next_open01();
  const double phi = M_PI * u1;  // uniform on (0, pi)
  const double w = -std::log(u2);
  // Kanter's construction: every factor is positive on (0, pi), so the
  // support is the positive axis by construction.
  const double num = std::sin(beta * phi);
  const double den = std::pow(std::sin(phi), 1.0 / beta);
  const double tail =
      std::pow(std::sin((1.0 - beta) * phi) / w, (1.0 - beta) / beta);
  return num / den * tail;
}

std::vector<double> sample_scaled_increments(const stable::StableParams& p,
                                             double tau_star, std::size_t n,
                                             RngStream& rng) {
  if (!(tau_star > 0.0)) throw DomainError("tau_star must be > 0");
  if (n == 0) throw DomainError("increment count must be >= 1");
  const double h = std::pow(tau_star, 1.0 / p.alpha);
  std::vector<double> out(n);
  for (auto& x : out) x = h * sample_stable(p, rng);
  return out;
}

std::vector<double> sample_scaled_increments(double beta, double tau_star,
                                             std::size_t n, RngStream& rng) {
  if (!(tau_star > 0.0)) throw DomainError("tau_star must be > 0");
  if (n == 0) throw DomainError("increment count must be >= 1");
  const double tau = std::pow(tau_star, 1.0 / beta);
  std::vector<double> out(n);
  for (auto& x : out) x = tau * sample_one_sided(beta, rng);
  return out;
}

}  // namespace stfd::sampling
