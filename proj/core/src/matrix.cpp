#include "qcones/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qcones {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw DimensionError("CMatrix: data size does not match shape");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t n, std::size_t j, std::size_t k) {
  CMatrix m(n, n);
  m(j, k) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
  CMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

CMatrix CMatrix::conj() const {
  CMatrix r = *this;
  for (auto& z : r.data_) z = std::conj(z);
  return r;
}

cplx CMatrix::trace() const {
  cplx t{0.0, 0.0};
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::hs_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::hermiticity_defect() const {
  if (!square()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(rows_, o.rows_, "CMatrix +");
  require_same_dim(cols_, o.cols_, "CMatrix +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(rows_, o.rows_, "CMatrix -");
  require_same_dim(cols_, o.cols_, "CMatrix -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.cols_, b.rows_, "CMatrix *");
  CMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

CMatrix outer(std::span<const cplx> a, std::span<const cplx> b) {
  CMatrix r(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r(i, j) = a[i] * std::conj(b[j]);
  return r;
}

std::vector<cplx> matvec(const CMatrix& a, std::span<const cplx> v) {
  require_same_dim(a.cols(), v.size(), "matvec");
  std::vector<cplx> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  require_same_dim(a.size(), b.size(), "inner");
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vec_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<cplx> r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.rows(), b.rows(), "max_abs_diff");
  require_same_dim(a.cols(), b.cols(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

HermMat::HermMat(CMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw DimensionError("HermMat: matrix is not square");
  const double defect = m_.hermiticity_defect();
  if (!(defect <= kHermitianTol)) {
    throw NotHermitianError("HermMat: Hermiticity defect " + std::to_string(defect) +
                            " exceeds tolerance");
  }
}

HermMat HermMat::symmetrize(const CMatrix& m) {
  if (!m.square()) throw DimensionError("HermMat::symmetrize: matrix is not square");
  const std::size_t n = m.rows();
  CMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      r(i, j) = v;
      r(j, i) = std::conj(v);
    }
  }
  return HermMat(std::move(r), Trusted{});
}

HermMat HermMat::identity(std::size_t n) { return HermMat(CMatrix::identity(n), Trusted{}); }
HermMat HermMat::zeros(std::size_t n) { return HermMat(CMatrix(n, n), Trusted{}); }
HermMat HermMat::unit(std::size_t n, std::size_t j) {
  return HermMat(CMatrix::unit(n, j, j), Trusted{});
}
HermMat HermMat::diagonal(std::span<const double> d) {
  return HermMat(CMatrix::diagonal(d), Trusted{});
}
HermMat HermMat::projector(std::span<const cplx> v) { return symmetrize(outer(v, v)); }

HermMat& HermMat::operator+=(const HermMat& o) {
  m_ += o.m_;
  return *this;
}
HermMat& HermMat::operator-=(const HermMat& o) {
  m_ -= o.m_;
  return *this;
}
HermMat& HermMat::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermMat HermMat::congruence(const CMatrix& a) const {
  return symmetrize(a * m_ * a.adjoint());
}

double hs_inner(const HermMat& a, const HermMat& b) {
  require_same_dim(a.dim(), b.dim(), "hs_inner");
  // Tr(AB) = sum_jk A_jk B_kj = sum_jk A_jk conj(B_jk) for Hermitian B.
  double s = 0.0;
  const auto da = a.matrix().data();
  const auto db = b.matrix().data();
  for (std::size_t i = 0; i < da.size(); ++i)
    s += da[i].real() * db[i].real() + da[i].imag() * db[i].imag();
  return s;
}

double hs_distance(const HermMat& a, const HermMat& b) {
  require_same_dim(a.dim(), b.dim(), "hs_distance");
  return (a.matrix() - b.matrix()).hs_norm();
}

double expectation(const HermMat& a, std::span<const cplx> v) {
  require_same_dim(a.dim(), v.size(), "expectation");
  const auto av = matvec(a.matrix(), v);
  return inner(v, av).real();
}

}  // namespace qcones
