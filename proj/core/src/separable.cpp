#include "qcones/separable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "qcones/random.hpp"

namespace qcones {

std::vector<double> herm_coords(const HermMat& h) {
  const std::size_t d = h.dim();
  std::vector<double> x;
  x.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) x.push_back(h(i, i).real());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      x.push_back(M_SQRT2 * h(i, j).real());
      x.push_back(M_SQRT2 * h(i, j).imag());
    }
  return x;
}

HermMat herm_from_coords(std::span<const double> x, std::size_t d) {
  require_same_dim(x.size(), d * d, "herm_from_coords");
  CMatrix m(d, d);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d; ++i) m(i, i) = x[k++];
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx v(x[k] * M_SQRT1_2, x[k + 1] * M_SQRT1_2);
      k += 2;
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  return HermMat::symmetrize(m);
}

std::shared_ptr<const ProductPool> product_pool(std::size_t n, std::size_t size,
                                                std::uint64_t seed) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>,
                  std::shared_ptr<const ProductPool>>
      cache;
  const auto key = std::make_tuple(n, size, seed);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto pool = std::make_shared<ProductPool>();
  pool->n = n;
  const std::size_t m = n * n * n * n;
  pool->columns.reserve(m * size);
  RngStream rng(seed, 0x5e9);
  for (std::size_t k = 0; k < size; ++k) {
    auto xi = random_unit_vector(n, rng);
    auto eta = random_unit_vector(n, rng);
    const auto c = herm_coords(HermMat::projector(kron(std::span<const cplx>(xi),
                                                       std::span<const cplx>(eta))));
    pool->columns.insert(pool->columns.end(), c.begin(), c.end());
    pool->xi.push_back(std::move(xi));
    pool->eta.push_back(std::move(eta));
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(pool)).first->second;
}

namespace {

// Least squares on the selected columns by modified Gram-Schmidt QR with one
// re-orthogonalization pass.
std::vector<double> lstsq_subset(std::span<const double> a, std::size_t m,
                                 const std::vector<std::size_t>& cols,
                                 std::span<const double> b) {
  const std::size_t p = cols.size();
  std::vector<double> q(m * p), r(p * p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double* qj = &q[j * m];
    std::copy_n(&a[cols[j] * m], m, qj);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < j; ++i) {
        const double* qi = &q[i * m];
        double s = 0.0;
        for (std::size_t t = 0; t < m; ++t) s += qi[t] * qj[t];
        r[i * p + j] += s;
        for (std::size_t t = 0; t < m; ++t) qj[t] -= s * qi[t];
      }
    double nrm = 0.0;
    for (std::size_t t = 0; t < m; ++t) nrm += qj[t] * qj[t];
    nrm = std::sqrt(nrm);
    r[j * p + j] = nrm;
    if (nrm > 0.0)
      for (std::size_t t = 0; t < m; ++t) qj[t] /= nrm;
  }
  std::vector<double> z(p);
  for (std::size_t j = 0; j < p; ++j) {
    double s = 0.0;
    for (std::size_t t = 0; t < m; ++t) s += q[j * m + t] * b[t];
    z[j] = s;
  }
  for (std::size_t jj = p; jj-- > 0;) {
    double s = z[jj];
    for (std::size_t k = jj + 1; k < p; ++k) s -= r[jj * p + k] * z[k];
    z[jj] = r[jj * p + jj] > 1e-14 ? s / r[jj * p + jj] : 0.0;
  }
  return z;
}

}  // namespace

NnlsResult nnls(std::span<const double> a, std::size_t m, std::size_t k,
                std::span<const double> b, int max_outer) {
  if (max_outer <= 0) max_outer = static_cast<int>(3 * m + 10);
  NnlsResult out;
  out.x.assign(k, 0.0);
  std::vector<char> passive(k, 0);
  std::vector<std::size_t> pset;
  std::vector<double> resid(b.begin(), b.end());
  double bnorm = 0.0;
  for (double v : b) bnorm += v * v;
  const double wtol = 1e-12 * std::max(1.0, std::sqrt(bnorm));

  auto update_residual = [&] {
    std::copy(b.begin(), b.end(), resid.begin());
    for (std::size_t j : pset)
      for (std::size_t t = 0; t < m; ++t) resid[t] -= a[j * m + t] * out.x[j];
  };

  for (int outer = 0; outer < max_outer; ++outer) {
    out.iterations = outer + 1;
    std::size_t best = k;
    double wbest = wtol;
    for (std::size_t j = 0; j < k; ++j) {
      if (passive[j]) continue;
      double w = 0.0;
      const double* col = &a[j * m];
      for (std::size_t t = 0; t < m; ++t) w += col[t] * resid[t];
      if (w > wbest) {
        wbest = w;
        best = j;
      }
    }
    if (best == k) break;
    passive[best] = 1;
    pset.push_back(best);

    for (int inner = 0; inner < 4 * static_cast<int>(m) + 10; ++inner) {
      const auto z = lstsq_subset(a, m, pset, b);
      bool feasible = true;
      for (double v : z)
        if (v <= 0.0) feasible = false;
      if (feasible) {
        for (std::size_t i = 0; i < pset.size(); ++i) out.x[pset[i]] = z[i];
        break;
      }
      double alpha = 1.0;
      for (std::size_t i = 0; i < pset.size(); ++i) {
        if (z[i] <= 0.0) {
          const double xi = out.x[pset[i]];
          const double denom = xi - z[i];
          alpha = denom > 0.0 ? std::min(alpha, xi / denom) : 0.0;
        }
      }
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < pset.size(); ++i) {
        double& xv = out.x[pset[i]];
        xv += alpha * (z[i] - xv);
        if (xv <= 1e-15) {
          xv = 0.0;
          passive[pset[i]] = 0;
        } else {
          keep.push_back(pset[i]);
        }
      }
      pset = std::move(keep);
      if (pset.empty()) break;
    }
    update_residual();
  }
  update_residual();
  double r = 0.0;
  for (double v : resid) r += v * v;
  out.residual = std::sqrt(r);
  return out;
}

HermMat SeparableDecomposition::assemble(std::size_t n) const {
  HermMat acc = HermMat::zeros(n * n);
  for (std::size_t i = 0; i < weights.size(); ++i)
    acc += HermMat::projector(kron(std::span<const cplx>(xi[i]), std::span<const cplx>(eta[i]))) *
           weights[i];
  return acc;
}

SeparableDecomposition separable_fit(
    const HermMat& d, const ProductPool& pool,
    const std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>>& extra) {
  const std::size_t n = pool.n;
  require_same_dim(d.dim(), n * n, "separable_fit");
  const std::size_t m = n * n * n * n;
  std::vector<double> a;
  std::span<const double> cols = pool.columns;
  if (!extra.empty()) {
    a = pool.columns;
    for (const auto& [x, y] : extra) {
      const auto c = herm_coords(HermMat::projector(kron(std::span<const cplx>(x),
                                                         std::span<const cplx>(y))));
      a.insert(a.end(), c.begin(), c.end());
    }
    cols = a;
  }
  const std::size_t k = pool.size() + extra.size();
  const auto b = herm_coords(d);
  const NnlsResult r = nnls(cols, m, k, b);
  SeparableDecomposition out;
  out.residual = r.residual;
  for (std::size_t j = 0; j < k; ++j) {
    if (r.x[j] <= 0.0) continue;
    out.weights.push_back(r.x[j]);
    if (j < pool.size()) {
      out.xi.push_back(pool.xi[j]);
      out.eta.push_back(pool.eta[j]);
    } else {
      out.xi.push_back(extra[j - pool.size()].first);
      out.eta.push_back(extra[j - pool.size()].second);
    }
  }
  return out;
}

}  // namespace qcones
