#include "qcones/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcones {

namespace {

double off_diagonal_sq(const std::vector<cplx>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a[i * n + j]);
  return 2.0 * s;
}

// Rotation J = [[c, s e], [-s conj(e), c]] on the (p, q) plane, applied as
// A <- J^dagger A J and V <- V J. Zeroes A(p, q).
void rotate(std::vector<cplx>& a, std::vector<cplx>& v, std::size_t n, std::size_t p,
            std::size_t q) {
  const cplx apq = a[p * n + q];
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx e = apq / mag;
  const double app = a[p * n + p].real();
  const double aqq = a[q * n + q].real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx se = s * e;
  const cplx sec = s * std::conj(e);

  // Columns: A <- A J.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a[k * n + p];
    const cplx akq = a[k * n + q];
    a[k * n + p] = c * akp - sec * akq;
    a[k * n + q] = se * akp + c * akq;
  }
  // Rows: A <- J^dagger A.
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a[p * n + k];
    const cplx aqk = a[q * n + k];
    a[p * n + k] = c * apk - se * aqk;
    a[q * n + k] = sec * apk + c * aqk;
  }
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  a[p * n + p] = a[p * n + p].real();
  a[q * n + q] = a[q * n + q].real();

  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v[k * n + p];
    const cplx vkq = v[k * n + q];
    v[k * n + p] = c * vkp - sec * vkq;
    v[k * n + q] = se * vkp + c * vkq;
  }
}

}  // namespace

std::vector<cplx> Spectrum::vector(std::size_t k) const {
  std::vector<cplx> r(vectors.rows());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = vectors(i, k);
  return r;
}

HermMat Spectrum::reconstruct() const {
  const std::size_t n = values.size();
  CMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = values[k] * vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * std::conj(vectors(j, k));
    }
  return HermMat::symmetrize(r);
}

Spectrum eigh(const HermMat& h) {
  const std::size_t n = h.dim();
  std::vector<cplx> a(h.matrix().data().begin(), h.matrix().data().end());
  std::vector<cplx> v(n * n, cplx{});
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double norm_sq = std::norm(h.hs_norm());
  const double target = norm_sq * 1e-30;
  int sweep = 0;
  double off = off_diagonal_sq(a, n);
  while (off > target && off > 0.0) {
    if (++sweep > kJacobiMaxSweeps) {
      throw EigenConvergenceError("eigh: Jacobi did not converge within sweep cap",
                                  std::sqrt(off), std::sqrt(norm_sq));
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        // Skip entries already negligible relative to their diagonal pair.
        const double mag = std::abs(a[p * n + q]);
        if (mag == 0.0) continue;
        const double dp = std::abs(a[p * n + p].real());
        const double dq = std::abs(a[q * n + q].real());
        if (sweep > 4 && dp + 100.0 * mag == dp && dq + 100.0 * mag == dq) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        rotate(a, v, n, p, q);
      }
    off = off_diagonal_sq(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() > a[j * n + j].real();
  });
  Spectrum s;
  s.values.resize(n);
  s.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    s.values[k] = a[order[k] * n + order[k]].real();
    for (std::size_t i = 0; i < n; ++i) s.vectors(i, k) = v[i * n + order[k]];
  }
  return s;
}

std::vector<double> eigvalsh(const HermMat& a) { return eigh(a).values; }

double min_eigenvalue(const HermMat& a) { return eigh(a).values.back(); }
double max_eigenvalue(const HermMat& a) { return eigh(a).values.front(); }

std::pair<double, std::vector<cplx>> bottom_eigenpair(const HermMat& a) {
  auto s = eigh(a);
  const std::size_t k = s.values.size() - 1;
  return {s.values[k], s.vector(k)};
}

bool is_psd_raw(std::span<const cplx> a, std::size_t n, double tol, std::span<cplx> work) {
  // In-place Cholesky of A + tol*I on the lower triangle.
  std::copy(a.begin(), a.end(), work.begin());
  for (std::size_t i = 0; i < n; ++i) work[i * n + i] += tol;
  for (std::size_t j = 0; j < n; ++j) {
    double d = work[j * n + j].real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(work[j * n + k]);
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    work[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = work[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= work[i * n + k] * std::conj(work[j * n + k]);
      work[i * n + j] = s / ljj;
    }
  }
  return true;
}

bool is_psd(const HermMat& a, double tol) {
  std::vector<cplx> work(a.dim() * a.dim());
  return is_psd_raw(a.matrix().data(), a.dim(), tol, work);
}

HermMat spectral_map(const HermMat& a, double (*f)(double)) {
  auto s = eigh(a);
  for (auto& v : s.values) v = f(v);
  return s.reconstruct();
}

HermMat psd_part(const HermMat& a) {
  return spectral_map(a, [](double x) { return x > 0.0 ? x : 0.0; });
}

std::pair<HermMat, HermMat> jordan_split(const HermMat& a) {
  auto s = eigh(a);
  Spectrum plus = s, minus = s;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    plus.values[k] = std::max(s.values[k], 0.0);
    minus.values[k] = std::max(-s.values[k], 0.0);
  }
  return {plus.reconstruct(), minus.reconstruct()};
}

double trace_norm(const HermMat& a) {
  double s = 0.0;
  for (double v : eigvalsh(a)) s += std::abs(v);
  return s;
}

double operator_norm(const HermMat& a) {
  const auto v = eigvalsh(a);
  return std::max(std::abs(v.front()), std::abs(v.back()));
}

HermMat sqrt_psd(const HermMat& a) {
  return spectral_map(a, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

HermMat inv_sqrt_pd(const HermMat& a) {
  auto s = eigh(a);
  if (!(s.values.back() > 0.0)) throw std::domain_error("inv_sqrt_pd: matrix is singular");
  for (auto& v : s.values) v = 1.0 / std::sqrt(v);
  return s.reconstruct();
}

}  // namespace qcones
