#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcones {

using cplx = std::complex<double>;

/// Tolerance used when a matrix is accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static CMatrix identity(std::size_t n);
  /// E_{jk}: a single 1 at (j, k).
  static CMatrix unit(std::size_t n, std::size_t j, std::size_t k);
  static CMatrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;
  cplx trace() const;
  double hs_norm() const;
  /// max_{j,k} |A_jk - conj(A_kj)|
  double hermiticity_defect() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
/// Column vector |v><v|-style outer product a b^dagger.
CMatrix outer(std::span<const cplx> a, std::span<const cplx> b);
std::vector<cplx> matvec(const CMatrix& a, std::span<const cplx> v);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // <a|b>
double vec_norm(std::span<const cplx> v);
std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Square Hermitian matrix. Construction rejects inputs whose Hermiticity
/// defect exceeds kHermitianTol; use symmetrize() to repair numerical drift.
class HermMat {
 public:
  HermMat() = default;
  explicit HermMat(CMatrix m);

  static HermMat symmetrize(const CMatrix& m);
  static HermMat identity(std::size_t n);
  static HermMat zeros(std::size_t n);
  static HermMat unit(std::size_t n, std::size_t j);  // E_jj
  static HermMat diagonal(std::span<const double> d);
  /// |v><v|
  static HermMat projector(std::span<const cplx> v);

  std::size_t dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

  double trace() const { return m_.trace().real(); }
  double hs_norm() const { return m_.hs_norm(); }

  HermMat& operator+=(const HermMat& o);
  HermMat& operator-=(const HermMat& o);
  HermMat& operator*=(double s);
  friend HermMat operator+(HermMat a, const HermMat& b) { return a += b; }
  friend HermMat operator-(HermMat a, const HermMat& b) { return a -= b; }
  friend HermMat operator*(HermMat a, double s) { return a *= s; }
  friend HermMat operator*(double s, HermMat a) { return a *= s; }
  friend HermMat operator-(HermMat a) { return a *= -1.0; }
  friend bool operator==(const HermMat&, const HermMat&) = default;

  /// A X A^dagger, symmetrized.
  HermMat congruence(const CMatrix& a) const;

 private:
  struct Trusted {};
  HermMat(CMatrix m, Trusted) : m_(std::move(m)) {}
  CMatrix m_;
};

/// Tr(A B) for Hermitian A, B.
double hs_inner(const HermMat& a, const HermMat& b);
double hs_distance(const HermMat& a, const HermMat& b);
/// <v|A|v>, real part.
double expectation(const HermMat& a, std::span<const cplx> v);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace qcones
