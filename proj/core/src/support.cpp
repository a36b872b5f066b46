#include "qcones/support.hpp"

#include <algorithm>
#include <cmath>

#include "qcones/eigen.hpp"

namespace qcones {

namespace {

double h_cp(const HermMat& u, std::size_t n) { return static_cast<double>(n) * max_eigenvalue(u); }

double h_ccp(const HermMat& u, std::size_t n) {
  return static_cast<double>(n) * max_eigenvalue(partial_transpose(u, n));
}

// Largest s with I/N + s x >= 0.
double psd_ray(const HermMat& x, std::size_t n) {
  const double lmin = min_eigenvalue(x);
  return lmin < 0.0 ? 1.0 / (static_cast<double>(n) * -lmin) : INFINITY;
}

SupportValue exact_value(double v) { return {v, v, true, false}; }

SupportValue h_sp(const HermMat& u, std::size_t n, const SupportParams& p) {
  // Extreme points of SP^b are N |xi eta><xi eta|.
  const ProductMin best = seesaw_min(-u, n, p.seesaw);
  const double lower = -static_cast<double>(n) * best.value;
  const double upper = std::min(h_cp(u, n), h_ccp(u, n));
  return {lower, std::max(lower, upper), false, true};
}

SupportValue h_p(const HermMat& u, const BodySpec& body, const SupportParams& p) {
  // h_{P^b}(u) is the gauge of u in -(SP^b - Phi_*), i.e. 1 / s_max with
  // s_max = sup{s : Phi_* - s u in SP^b}.
  const std::size_t n = body.n;
  const HermMat neg = -u;
  const double s_t = t_base_ray(neg, n);
  if (n == 2) return exact_value(1.0 / s_t);
  const HermMat center = depolarizing_choi(n).mat();
  double lo = 1.0 / std::sqrt(static_cast<double>(n * n - 1));
  double hi = s_t;
  for (int it = 0; it < p.bisect_steps && hi - lo > 1e-10 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const Verdict v = cone_membership(ChoiMat(n, center + neg * mid), ConeId::SP, body.params);
    if (v.status == Status::In) {
      lo = mid;
    } else if (v.status == Status::Out) {
      hi = mid;
    } else {
      break;  // an undecided point leaves [1/hi, 1/lo] as the answer
    }
  }
  return {1.0 / hi, 1.0 / lo, false, false};
}

SupportValue h_t(const HermMat& u, std::size_t n, const SupportParams& p) {
  double lower = t_base_ray(u, n);
  const SupportValue sp = h_sp(u, n, p);
  lower = std::max(lower, sp.lower);
  const HermMat center = depolarizing_choi(n).mat();
  for (const auto& x : p.pool) lower = std::max(lower, hs_inner(u, x - center));
  const double upper = std::min(h_cp(u, n), h_ccp(u, n));
  return {lower, std::max(lower, upper), false, false};
}

}  // namespace

double t_base_ray(const HermMat& u, std::size_t n) {
  return std::min(psd_ray(u, n), psd_ray(partial_transpose(u, n), n));
}

SupportValue support_function(const HermMat& u, const BodySpec& body,
                              const SupportParams& params) {
  validate(body);
  const std::size_t n = body.n;
  require_same_dim(u.dim(), n * n, "support_function");
  const double nn = static_cast<double>(n);
  if (std::abs(u.hs_norm() - 1.0) > 1e-9)
    throw std::invalid_argument("support_function: direction must have unit HS norm");

  if (body.slice == Slice::Sym || body.slice == Slice::SymPolar) {
    if (body.cone != ConeId::CP && body.cone != ConeId::CcP)
      throw UnsupportedSlice("support_function: Sym bodies supported for CP and CcP only");
    const HermMat v = body.cone == ConeId::CcP ? partial_transpose(u, n) : u;
    // Sym is the trace-norm ball of radius N; SymPolar the operator-norm ball of radius 1/N.
    return exact_value(body.slice == Slice::Sym ? nn * operator_norm(v) : trace_norm(v) / nn);
  }
  if (body.slice != Slice::Base)
    throw UnsupportedSlice("support_function: only base, sym and sympolar slices");
  if (std::abs(u.trace()) > 1e-9)
    throw std::invalid_argument("support_function: direction must be traceless");

  switch (body.cone) {
    case ConeId::CP: return exact_value(h_cp(u, n));
    case ConeId::CcP: return exact_value(h_ccp(u, n));
    case ConeId::D: return exact_value(std::max(h_cp(u, n), h_ccp(u, n)));
    case ConeId::T: return h_t(u, n, params);
    case ConeId::SP: return h_sp(u, n, params);
    case ConeId::P: return h_p(u, body, params);
  }
  throw UnsupportedSlice("support_function: unknown cone");
}

}  // namespace qcones
