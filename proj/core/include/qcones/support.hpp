#pragma once

#include <vector>

#include "qcones/cones.hpp"

namespace qcones {

/// h_K(u) = max over x in K of <u, x - center>. Exact bodies report
/// lower == upper; otherwise [lower, upper] brackets the true value.
struct SupportValue {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = true;
  /// Set when `lower` comes from a non-exhaustive search.
  bool heuristic = false;
};

struct SupportParams {
  SeesawParams seesaw{};
  int bisect_steps = 50;
  /// Extra body points, e.g. walk samples, that tighten interval lower bounds.
  std::vector<HermMat> pool;
};

/// Base slices: u traceless with unit HS norm, center Phi_*.
/// Sym and SymPolar slices of CP and CcP: any unit u, center 0.
SupportValue support_function(const HermMat& u, const BodySpec& body,
                              const SupportParams& params = {});

/// Largest t with Phi_* + t u in T^b; closed form from two spectra.
double t_base_ray(const HermMat& u, std::size_t n);

}  // namespace qcones
