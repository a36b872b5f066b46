#pragma once

#include <functional>
#include <span>

#include "qcones/estimate.hpp"
#include "qcones/support.hpp"

namespace qcones {

/// Mean of h_K over uniform unit directions of the body's tangent space.
/// For interval supports both endpoint means are reported.
struct WidthResult {
  Estimate lower;
  Estimate upper;
  bool interval = false;
  bool heuristic = false;
  std::size_t n_dirs = 0;
};

/// Directions are split into `groups` independent streams; stderr is the
/// spread of the group means.
WidthResult mean_width_mc(const BodySpec& body, std::size_t n_dirs, std::uint64_t seed,
                          const SupportParams& params = {}, std::size_t groups = 8);

/// Same estimator for any body given by an exact support function on R^dim.
WidthResult mean_width_mc(std::size_t dim, const std::function<double(std::span<const double>)>& support,
                          std::size_t n_dirs, std::uint64_t seed, std::size_t groups = 8);

/// Polar of a base about Phi_*: (C^b)° = -(C*)^b, which has the width of (C*)^b.
BodySpec polar_base(const BodySpec& body);

/// [1 / w(K°), w(K)] must contain vrad(K). Uses the conservative interval ends.
struct UrysohnBracket {
  double lower = 0.0;
  double upper = 0.0;
};
UrysohnBracket urysohn_bracket(const WidthResult& body, const WidthResult& polar);

}  // namespace qcones
