#pragma once

#include "qcones/choi.hpp"

namespace qcones {

struct SplitParams {
  /// Success when ||D - A - B^{T_B}||_HS <= tol * max(1, ||D||_HS).
  double tol = 1e-8;
  int max_iter = 50000;
  int plateau_window = 500;
  double plateau_rel = 1e-10;
};

/// Outcome of D = A + B^{T_B} with A, B PSD. On failure A and B hold the
/// last iterate and `residual` the plateau value.
struct SplitResult {
  bool success = false;
  bool plateau = false;
  HermMat a;
  HermMat b;
  double residual = 0.0;
  int iterations = 0;
};

/// Dykstra projections between the PSD cone and {X : (D - X)^{T_B} >= 0}.
SplitResult decomposable_split(const ChoiMat& d, const SplitParams& params = {});

/// W in T with <D, W> < 0, derived from the projection of D onto the
/// decomposable cone. `value` is <D, W>; `valid` is false when the shifted
/// candidate fails to separate.
struct DualWitness {
  bool valid = false;
  HermMat w;
  double value = 0.0;
};
DualWitness decomposable_dual_witness(const ChoiMat& d, int iterations = 2000);

}  // namespace qcones
