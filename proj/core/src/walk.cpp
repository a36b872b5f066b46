#include "qcones/walk.hpp"

#include <cmath>

namespace qcones {

double norm_sq(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

WalkState walk_start(const ConvexBody& body) {
  WalkState s;
  s.x.assign(body.dim(), 0.0);
  return s;
}

double chord_extent(const ConvexBody& body, std::span<const double> x, std::span<const double> u,
                    double t_cap) {
  thread_local std::vector<double> y;
  y.resize(x.size());
  auto inside = [&](double t) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + t * u[i];
    return body.contains(y);
  };
  double hi = t_cap;
  double lo = 0.0;
  if (!std::isfinite(hi)) {
    hi = 1.0;
    while (inside(hi)) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e12) return hi;
    }
  } else if (inside(hi)) {
    return hi;
  }
  for (int it = 0; it < kChordBisectSteps; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (inside(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void hit_and_run_step(const ConvexBody& body, WalkState& state, RngStream& rng,
                      double ball_radius) {
  const std::size_t m = body.dim();
  const auto u = random_direction(m, rng);
  double cap_plus = INFINITY, cap_minus = INFINITY;
  double rho = std::min(ball_radius, body.outradius());
  if (std::isfinite(rho)) {
    // |x + t u|^2 = rho^2.
    double xu = 0.0;
    for (std::size_t i = 0; i < m; ++i) xu += state.x[i] * u[i];
    const double disc = std::max(0.0, xu * xu - norm_sq(state.x) + rho * rho);
    const double sq = std::sqrt(disc);
    cap_plus = std::max(0.0, -xu + sq);
    cap_minus = std::max(0.0, xu + sq);
  }
  std::vector<double> neg(u.size());
  for (std::size_t i = 0; i < m; ++i) neg[i] = -u[i];
  const double tp = chord_extent(body, state.x, u, cap_plus);
  const double tm = chord_extent(body, state.x, neg, cap_minus);
  ++state.steps;
  if (tp + tm < kChordCollapse) {
    ++state.stuck;
    return;
  }
  const double t = -tm + (tp + tm) * rng.uniform();
  for (std::size_t i = 0; i < m; ++i) state.x[i] += t * u[i];
}

}  // namespace qcones
