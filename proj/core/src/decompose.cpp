#include "qcones/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "qcones/eigen.hpp"

namespace qcones {

namespace {

// min(lambda, 0) part in HS norm.
double negative_norm(const Spectrum& s) {
  double acc = 0.0;
  for (double v : s.values)
    if (v < 0.0) acc += v * v;
  return std::sqrt(acc);
}

HermMat clip(Spectrum s) {
  for (auto& v : s.values) v = std::max(v, 0.0);
  return s.reconstruct();
}

}  // namespace

SplitResult decomposable_split(const ChoiMat& dm, const SplitParams& params) {
  const std::size_t n = dm.n();
  const HermMat& d = dm.mat();
  const double scale = std::max(1.0, d.hs_norm());
  const double tol = params.tol * scale;
  SplitResult out;

  if (is_psd(d, 0.0)) {
    out.success = true;
    out.a = d;
    out.b = HermMat::zeros(n * n);
    return out;
  }

  // Dykstra: x = P_C2(P_C1(x + p) + q), with correction terms p, q.
  HermMat x = d;
  HermMat p = HermMat::zeros(n * n);
  HermMat q = HermMat::zeros(n * n);
  HermMat y;
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(params.max_iter / params.plateau_window) + 2);
  double residual = INFINITY;

  for (int it = 1; it <= params.max_iter; ++it) {
    y = psd_part(x + p);
    p = x + p - y;
    const HermMat z = y + q;
    const Spectrum sz = eigh(partial_transpose(d - z, n));
    x = d - partial_transpose(clip(sz), n);
    q = z - x;

    // Residual of the PSD iterate against the second set.
    const Spectrum sy = eigh(partial_transpose(d - y, n));
    residual = negative_norm(sy);
    out.iterations = it;
    if (residual <= tol) {
      out.success = true;
      out.a = y;
      out.b = clip(sy);
      out.residual = residual;
      return out;
    }
    if (it % params.plateau_window == 0) {
      if (!history.empty()) {
        const double prev = history.back();
        if (prev - residual < params.plateau_rel * prev) {
          out.plateau = true;
          history.push_back(residual);
          break;
        }
      }
      history.push_back(residual);
    }
  }
  out.a = y;
  out.b = psd_part(partial_transpose(d - y, n));
  out.residual = residual;
  return out;
}

DualWitness decomposable_dual_witness(const ChoiMat& dm, int iterations) {
  const std::size_t n = dm.n();
  const HermMat& d = dm.mat();
  // Block coordinate descent for min ||A + B^{T_B} - D|| over A, B >= 0;
  // converges to the projection P_K(D) onto the decomposable cone K.
  HermMat a = psd_part(d);
  HermMat b = HermMat::zeros(n * n);
  for (int it = 0; it < iterations; ++it) {
    b = psd_part(partial_transpose(d - a, n));
    a = psd_part(d - partial_transpose(b, n));
  }
  // P_K(D) - D lies in K* = T up to the approximation error of the iterate.
  HermMat w = a + partial_transpose(b, n) - d;
  const double lo = std::min(min_eigenvalue(w), min_eigenvalue(partial_transpose(w, n)));
  if (lo < 0.0) w += HermMat::identity(n * n) * (-lo * (1.0 + 1e-9) + 1e-14);
  DualWitness out;
  out.value = hs_inner(d, w);
  out.valid = out.value < 0.0;
  const double nrm = w.hs_norm();
  if (nrm > 0.0) {
    out.w = w * (1.0 / nrm);
    out.value /= nrm;
  } else {
    out.w = w;
  }
  return out;
}

}  // namespace qcones
