#include "qcones/choi.hpp"

#include <cmath>
#include <numbers>

namespace qcones {

std::size_t subsystem_dim(std::size_t d) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
  if (n * n != d || n == 0) {
    throw DimensionError("dimension " + std::to_string(d) + " is not a perfect square");
  }
  return n;
}

SuperOp::SuperOp(std::size_t n, CMatrix m) : n_(n), m_(std::move(m)) {
  if (m_.rows() != n * n || m_.cols() != n * n) {
    throw DimensionError("SuperOp: expected an N^2 x N^2 matrix");
  }
}

SuperOp SuperOp::identity(std::size_t n) { return {n, CMatrix::identity(n * n)}; }

SuperOp SuperOp::depolarizing(std::size_t n) {
  CMatrix m(n * n, n * n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a * n + a, b * n + b) = w;
  return {n, std::move(m)};
}

SuperOp SuperOp::transposition(std::size_t n) {
  CMatrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a * n + b, b * n + a) = 1.0;
  return {n, std::move(m)};
}

CMatrix SuperOp::apply(const CMatrix& rho) const {
  require_same_dim(rho.rows(), n_, "SuperOp::apply");
  require_same_dim(rho.cols(), n_, "SuperOp::apply");
  CMatrix out(n_, n_);
  const auto in = rho.data();
  for (std::size_t r = 0; r < n_ * n_; ++r) {
    cplx s{};
    for (std::size_t c = 0; c < n_ * n_; ++c) s += m_(r, c) * in[c];
    out.data()[r] = s;
  }
  return out;
}

double SuperOp::hermiticity_preservation_defect() const {
  double worst = 0.0;
  for (std::size_t n = 0; n < n_; ++n)
    for (std::size_t nu = 0; nu < n_; ++nu)
      for (std::size_t m = 0; m < n_; ++m)
        for (std::size_t mu = 0; mu < n_; ++mu)
          worst = std::max(worst, std::abs((*this)(n, nu, m, mu) -
                                           std::conj((*this)(nu, n, mu, m))));
  return worst;
}

ChoiMat::ChoiMat(std::size_t n, HermMat mat) : n_(n), mat_(std::move(mat)) {
  require_same_dim(mat_.dim(), n * n, "ChoiMat");
}

CMatrix ChoiMat::block(std::size_t m, std::size_t mu) const {
  CMatrix b(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) b(i, j) = mat_(m * n_ + i, mu * n_ + j);
  return b;
}

ChoiMat map_to_choi(const SuperOp& phi) {
  const std::size_t n = phi.n();
  CMatrix d(n * n, n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t nn = 0; nn < n; ++nn)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu) d(m * n + nn, mu * n + nu) = phi(nn, nu, m, mu);
  if (d.hermiticity_defect() > kHermitianTol) {
    throw NotHermitianError("map_to_choi: map is not Hermiticity-preserving");
  }
  return {n, HermMat(std::move(d))};
}

SuperOp choi_to_map(const ChoiMat& dm) {
  const std::size_t n = dm.n();
  CMatrix phi(n * n, n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t nn = 0; nn < n; ++nn)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu)
          phi(nn * n + nu, m * n + mu) = dm.mat()(m * n + nn, mu * n + nu);
  return {n, std::move(phi)};
}

HermMat apply_map(const SuperOp& phi, const HermMat& rho) {
  require_same_dim(rho.dim(), phi.n(), "apply_map");
  return HermMat::symmetrize(phi.apply(rho.matrix()));
}

HermMat apply_choi(const ChoiMat& d, const HermMat& rho) {
  const std::size_t n = d.n();
  require_same_dim(rho.dim(), n, "apply_choi");
  const CMatrix prod = d.matrix() * kron(rho.matrix().transpose(), CMatrix::identity(n));
  CMatrix out(n, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += prod(m * n + i, m * n + j);
  return HermMat::symmetrize(out);
}

HermMat partial_trace(const HermMat& d, std::size_t n, Subsystem s) {
  require_same_dim(d.dim(), n * n, "partial_trace");
  CMatrix out(n, n);
  if (s == Subsystem::B) {
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t k = 0; k < n; ++k) out(m, mu) += d(m * n + k, mu * n + k);
  } else {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) += d(k * n + i, k * n + j);
  }
  return HermMat::symmetrize(out);
}

HermMat partial_trace(const ChoiMat& d, Subsystem s) { return partial_trace(d.mat(), d.n(), s); }

HermMat partial_transpose(const HermMat& d, std::size_t n) {
  require_same_dim(d.dim(), n * n, "partial_transpose");
  CMatrix out(n * n, n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(m * n + i, mu * n + j) = d(m * n + j, mu * n + i);
  // Exact permutation of a Hermitian matrix; no repair needed.
  return HermMat(std::move(out));
}

ChoiMat partial_transpose(const ChoiMat& d) { return {d.n(), partial_transpose(d.mat(), d.n())}; }

HermMat rho_max(std::size_t n) {
  CMatrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a * n + a, b * n + b) = 1.0;
  return HermMat(std::move(m));
}

HermMat swap_operator(std::size_t n) {
  CMatrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a * n + b, b * n + a) = 1.0;
  return HermMat(std::move(m));
}

ChoiMat depolarizing_choi(std::size_t n) {
  return {n, HermMat::identity(n * n) * (1.0 / static_cast<double>(n))};
}

ChoiMat unitary_channel_choi(const CMatrix& v) {
  const std::size_t n = v.rows();
  // D = sum_{m,mu} E_{m mu} (x) V E_{m mu} V^dagger = |w><w|, w = sum_m e_m (x) V e_m.
  std::vector<cplx> w(n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) w[m * n + k] = v(k, m);
  return {n, HermMat::projector(w)};
}

ChoiMat isotropic_choi(std::size_t n, double p) {
  const HermMat mixed = HermMat::identity(n * n) * ((1.0 - p) / static_cast<double>(n));
  return {n, mixed + rho_max(n) * p};
}

CMatrix fourier_matrix(std::size_t n) {
  CMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                      static_cast<double>(n));
  return f;
}

}  // namespace qcones
