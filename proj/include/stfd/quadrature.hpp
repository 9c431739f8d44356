#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "stfd/errors.hpp"

namespace stfd {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_intervals = 4000;
};

struct QuadResult {
  double value;
  double error;  // conservative bound: sum of per-segment |Kronrod - Gauss|
  int intervals;
};

namespace quaddetail {

// 15-point Kronrod / embedded 7-point Gauss pair on [-1, 1] (QUADPACK dqk15
// nodes; Gauss nodes sit at the odd indices, index 7 is the midpoint).
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double* value, double* err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  *value = resk * h;
  *err = std::fabs((resk - resg) * h);
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace quaddetail

// Adaptive integration over the union of [knots[i], knots[i+1]]. Knots must
// be finite and ascending; callers seed them at known scales (boundary
// layers, oscillation nodes, density peaks) so the greedy refinement starts
// from an informed partition.
template <class F>
QuadResult integrate(F&& f, const std::vector<double>& knots,
                     const QuadOptions& opt = {}) {
  std::priority_queue<quaddetail::Segment> heap;
  double total = 0.0, toterr = 0.0;
  int count = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i] < knots[i + 1])) continue;
    quaddetail::Segment s{knots[i], knots[i + 1], 0.0, 0.0};
    quaddetail::gk15(f, s.a, s.b, &s.value, &s.error);
    total += s.value;
    toterr += s.error;
    heap.push(s);
    ++count;
  }
  auto converged = [&]() {
    return toterr <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total));
  };
  while (!converged() && !heap.empty()) {
    if (count >= opt.max_intervals) {
      throw ConvergenceError("quadrature interval budget exhausted", toterr,
                             total);
    }
    quaddetail::Segment s = heap.top();
    heap.pop();
    const double m = 0.5 * (s.a + s.b);
    if (m <= s.a || m >= s.b) continue;  // interval narrower than rounding
    quaddetail::Segment l{s.a, m, 0.0, 0.0}, r{m, s.b, 0.0, 0.0};
    quaddetail::gk15(f, l.a, l.b, &l.value, &l.error);
    quaddetail::gk15(f, r.a, r.b, &r.value, &r.error);
    total += l.value + r.value - s.value;
    toterr += l.error + r.error - s.error;
    heap.push(l);
    heap.push(r);
    ++count;
  }
  return {total, toterr, count};
}

template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  return integrate(std::forward<F>(f), std::vector<double>{a, b}, opt);
}

// Integral over (0, inf) via x = scale*u/(1-u). Gauss-Kronrod nodes are
// interior, so the u = 1 endpoint is never evaluated; the integrand must
// decay fast enough that the mapped tail contributes within tolerance.
template <class F>
QuadResult integrate_half_line(F&& f, double scale,
                               const QuadOptions& opt = {}) {
  auto g = [&f, scale](double u) {
    const double onem = 1.0 - u;
    const double x = scale * u / onem;
    return f(x) * scale / (onem * onem);
  };
  std::vector<double> knots{0.0, 0.125, 0.25, 0.5, 0.75, 0.875, 0.9375, 1.0};
  return integrate(g, knots, opt);
}

}  // namespace stfd
