#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qcones/matrix.hpp"

namespace qcones {

/// Real coordinates of a Hermitian matrix in an orthonormal basis:
/// diagonal entries, then sqrt(2) Re and sqrt(2) Im of the upper triangle.
std::vector<double> herm_coords(const HermMat& h);
HermMat herm_from_coords(std::span<const double> x, std::size_t d);

/// Pool of pure product projectors |xi eta><xi eta| on C^N (x) C^N.
struct ProductPool {
  std::size_t n = 0;
  std::vector<std::vector<cplx>> xi;
  std::vector<std::vector<cplx>> eta;
  /// Column-major: column k holds herm_coords of projector k.
  std::vector<double> columns;
  std::size_t size() const noexcept { return xi.size(); }
};

/// Deterministic pool; memoized per (n, size, seed), safe across threads.
std::shared_ptr<const ProductPool> product_pool(std::size_t n, std::size_t size,
                                                std::uint64_t seed);

struct NnlsResult {
  std::vector<double> x;
  double residual = 0.0;
  int iterations = 0;
};

/// Lawson-Hanson: min ||A x - b|| subject to x >= 0, A column-major m x k.
NnlsResult nnls(std::span<const double> a, std::size_t m, std::size_t k,
                std::span<const double> b, int max_outer = 0);

/// Weighted product terms sum_i w_i |xi_i eta_i><xi_i eta_i|.
struct SeparableDecomposition {
  std::vector<double> weights;
  std::vector<std::vector<cplx>> xi;
  std::vector<std::vector<cplx>> eta;
  double residual = 0.0;
  HermMat assemble(std::size_t n) const;
};

/// Nonnegative fit of D over the pool plus `extra` product pairs.
SeparableDecomposition separable_fit(const HermMat& d, const ProductPool& pool,
                                     const std::vector<std::pair<std::vector<cplx>,
                                                                 std::vector<cplx>>>& extra = {});

}  // namespace qcones
