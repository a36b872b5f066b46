#pragma once

#include <cstdint>
#include <vector>

#include "qcones/bodies.hpp"
#include "qcones/random.hpp"

namespace qcones {

inline constexpr int kChordBisectSteps = 40;
inline constexpr double kChordCollapse = 1e-12;

/// Position in body coordinates (relative to the body's center).
struct WalkState {
  std::vector<double> x;
  std::uint64_t steps = 0;
  /// Steps whose chord collapsed below kChordCollapse; the point was kept.
  std::uint64_t stuck = 0;
};

WalkState walk_start(const ConvexBody& body);

/// One hit-and-run step inside body n B(0, ball_radius). A uniform direction
/// is drawn, the chord is clipped analytically to the ball and located in the
/// body by bisection, and the new point is uniform on the chord. Pass
/// ball_radius = INFINITY to use the body alone.
void hit_and_run_step(const ConvexBody& body, WalkState& state, RngStream& rng,
                      double ball_radius = INFINITY);

/// Largest t >= 0 with x + t u in body (n ball), by doubling and bisection.
double chord_extent(const ConvexBody& body, std::span<const double> x, std::span<const double> u,
                    double t_cap);

double norm_sq(std::span<const double> x);

}  // namespace qcones
