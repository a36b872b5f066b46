#pragma once

#include <cstdint>
#include <vector>

#include "qcones/matrix.hpp"

namespace qcones {

struct SeesawParams {
  int restarts = 50;
  int max_iter = 200;
  /// Stop a restart once successive values differ by less than this.
  double converge_tol = 1e-13;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Best product vector found: value = <xi (x) eta| D |xi (x) eta>.
struct ProductMin {
  double value = 0.0;
  std::vector<cplx> xi;
  std::vector<cplx> eta;
  int restart = -1;
};

/// Heuristic minimum of <xi (x) eta|D|xi (x) eta> over unit xi, eta in C^N.
/// Alternates bottom eigenvectors of the two contracted N x N matrices.
/// Restarts use seeds derived from params.seed and the restart index, so the
/// result does not depend on how restarts are scheduled.
ProductMin seesaw_min(const HermMat& d, std::size_t n, const SeesawParams& params);

/// <xi (x) eta| D |xi (x) eta>.
double product_expectation(const HermMat& d, std::size_t n, std::span<const cplx> xi,
                           std::span<const cplx> eta);

/// Exact block-positivity test for N = 2: <xi (x) eta|D|xi (x) eta> >= -tol
/// for all unit xi, eta. The contracted matrix is a I + b.sigma, affine in
/// the Bloch vector r of xi, and a >= |b| on the unit ball is decided by the
/// S-lemma: some lambda >= 0 makes G^T eta G - lambda J PSD.
bool block_positive_qubit(const HermMat& d, double tol);

}  // namespace qcones
