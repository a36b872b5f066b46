#pragma once

#include <cstddef>

#include "qcones/matrix.hpp"

namespace qcones {

// Index conventions
// -----------------
// A map Phi on N x N matrices is stored as an N^2 x N^2 matrix acting on
// vectorized inputs: rho'_{n nu} = sum_{m mu} Phi[(n,nu),(m,mu)] rho_{m mu},
// with compound index (i,j) -> i*N + j.
//
// The Choi (dynamical) matrix reshuffles these indices:
//   D[(m,n),(mu,nu)] = Phi[(n,nu),(m,mu)],
// so D is an N x N block matrix whose (m,mu) block is Phi(E_{m mu}).
// The block index pair (m,mu) is subsystem A (input), the within-block pair
// (n,nu) is subsystem B (output). Tr_B sums within blocks, Tr_A sums the
// diagonal blocks, and the partial transpose T_B transposes every block.

/// Superoperator in the map-index convention above.
class SuperOp {
 public:
  SuperOp() = default;
  SuperOp(std::size_t n, CMatrix m);

  static SuperOp identity(std::size_t n);
  /// Phi_*(X) = Tr(X) I / N.
  static SuperOp depolarizing(std::size_t n);
  static SuperOp transposition(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const CMatrix& matrix() const noexcept { return m_; }
  cplx operator()(std::size_t n, std::size_t nu, std::size_t m, std::size_t mu) const {
    return m_(n * n_ + nu, m * n_ + mu);
  }

  CMatrix apply(const CMatrix& rho) const;
  /// max |Phi[(n,nu),(m,mu)] - conj(Phi[(nu,n),(mu,m)])|
  double hermiticity_preservation_defect() const;
  bool hermiticity_preserving(double tol = kHermitianTol) const {
    return hermiticity_preservation_defect() <= tol;
  }

  friend bool operator==(const SuperOp&, const SuperOp&) = default;

 private:
  std::size_t n_ = 0;
  CMatrix m_;
};

/// Choi (dynamical) matrix of a Hermiticity-preserving map.
class ChoiMat {
 public:
  ChoiMat() = default;
  ChoiMat(std::size_t n, HermMat mat);

  std::size_t n() const noexcept { return n_; }
  const HermMat& mat() const noexcept { return mat_; }
  const CMatrix& matrix() const noexcept { return mat_.matrix(); }
  /// Phi(E_{m mu}).
  CMatrix block(std::size_t m, std::size_t mu) const;
  double trace() const { return mat_.trace(); }

  friend bool operator==(const ChoiMat&, const ChoiMat&) = default;

 private:
  std::size_t n_ = 0;
  HermMat mat_;
};

enum class Subsystem { A, B };

/// Integer N with N*N == d, or DimensionError.
std::size_t subsystem_dim(std::size_t d);

ChoiMat map_to_choi(const SuperOp& phi);
SuperOp choi_to_map(const ChoiMat& d);
HermMat apply_map(const SuperOp& phi, const HermMat& rho);
/// Tr_A[D (rho^T (x) I)], the Choi-side evaluation of Phi(rho).
HermMat apply_choi(const ChoiMat& d, const HermMat& rho);

HermMat partial_trace(const ChoiMat& d, Subsystem s);
HermMat partial_trace(const HermMat& d, std::size_t n, Subsystem s);
ChoiMat partial_transpose(const ChoiMat& d);
HermMat partial_transpose(const HermMat& d, std::size_t n);

/// |xi><xi| with xi = sum_m e_m (x) e_m; Choi matrix of the identity map.
HermMat rho_max(std::size_t n);
/// Operator exchanging the two tensor factors of C^N (x) C^N.
HermMat swap_operator(std::size_t n);
/// Choi matrix of Phi_*: I_{N^2} / N.
ChoiMat depolarizing_choi(std::size_t n);
/// Choi matrix of rho -> V rho V^dagger.
ChoiMat unitary_channel_choi(const CMatrix& v);
/// Isotropic family (1-p) Phi_* + p Id.
ChoiMat isotropic_choi(std::size_t n, double p);
/// N-point discrete Fourier matrix.
CMatrix fourier_matrix(std::size_t n);

}  // namespace qcones
