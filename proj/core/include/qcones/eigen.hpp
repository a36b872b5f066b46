#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qcones/matrix.hpp"

namespace qcones {

/// Eigenvalues in descending order; column k of `vectors` pairs with values[k].
struct Spectrum {
  std::vector<double> values;
  CMatrix vectors;

  std::vector<cplx> vector(std::size_t k) const;
  HermMat reconstruct() const;
};

class EigenConvergenceError : public std::runtime_error {
 public:
  EigenConvergenceError(const std::string& what, double off_norm, double norm)
      : std::runtime_error(what), off_norm(off_norm), norm(norm) {}
  double off_norm;
  double norm;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
Spectrum eigh(const HermMat& a);
std::vector<double> eigvalsh(const HermMat& a);

double min_eigenvalue(const HermMat& a);
double max_eigenvalue(const HermMat& a);
/// Eigenpair for the smallest eigenvalue.
std::pair<double, std::vector<cplx>> bottom_eigenpair(const HermMat& a);

/// lambda_min(A) > -tol, decided by a Cholesky factorization of A + tol*I.
bool is_psd(const HermMat& a, double tol);
/// Same test on a raw row-major n x n Hermitian buffer; `work` is scratch of size n*n.
bool is_psd_raw(std::span<const cplx> a, std::size_t n, double tol, std::span<cplx> work);

/// Relative PSD slack used by all cone oracles: tol = rel * ||A||_HS.
inline double psd_tolerance(const HermMat& a, double rel) { return rel * a.hs_norm(); }

/// Nearest PSD matrix in Hilbert-Schmidt norm (negative eigenvalues clipped).
HermMat psd_part(const HermMat& a);
/// Positive and negative parts: A = plus - minus, both PSD.
std::pair<HermMat, HermMat> jordan_split(const HermMat& a);
double trace_norm(const HermMat& a);
double operator_norm(const HermMat& a);
/// f applied to the spectrum.
HermMat spectral_map(const HermMat& a, double (*f)(double));
HermMat sqrt_psd(const HermMat& a);
HermMat inv_sqrt_pd(const HermMat& a);

}  // namespace qcones
