#pragma once

#include <cstddef>

namespace qcones {

/// log vol_m of the Euclidean unit ball, pi^{m/2} / Gamma(m/2 + 1).
double log_ball_vol(std::size_t m);
double ball_vol(std::size_t m);

/// (vol / vol(B^m))^{1/m}, computed from log volumes.
double vrad_from_log_vol(double log_vol, std::size_t m);
double vrad_from_vol(double vol, std::size_t m);

/// HS volume of the d x d density matrices (dimension d^2 - 1):
/// sqrt(d) (2 pi)^{d(d-1)/2} Gamma(1)...Gamma(d) / Gamma(d^2).
double log_vol_states(std::size_t d);
/// Linear value; +inf when it overflows.
double exact_vol_states(std::size_t d);
double vrad_states(std::size_t d);

double log_binomial(std::size_t m, std::size_t k);

/// (vol_m(B^m) / (vol_k(B^k) vol_{m-k}(B^{m-k})))^{1/m}.
double bmk(std::size_t m, std::size_t k);

struct SectionBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// Bounds on vrad(K n H) for a k-dimensional section through the centroid
/// of an m-dimensional body with in/out radii r, R:
///   lo = (vrad R^{-(m-k)/m} b)^{m/k},  hi = (vrad r^{-(m-k)/m} b C(m,k)^{1/m})^{m/k}.
SectionBounds section_bounds(double vrad_k, double r, double big_r, std::size_t m,
                             std::size_t k);

}  // namespace qcones
