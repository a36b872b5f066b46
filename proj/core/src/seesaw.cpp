#include "qcones/seesaw.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qcones/eigen.hpp"
#include "qcones/random.hpp"

namespace qcones {

namespace {

// M(xi)_{n nu} = sum_{m mu} conj(xi_m) xi_mu D_{(m,n),(mu,nu)}
HermMat contract_a(const HermMat& d, std::size_t n, std::span<const cplx> xi) {
  CMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const cplx w = std::conj(xi[a]) * xi[b];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += w * d(a * n + i, b * n + j);
    }
  return HermMat::symmetrize(m);
}

// K(eta)_{m mu} = sum_{n nu} conj(eta_n) eta_nu D_{(m,n),(mu,nu)}
HermMat contract_b(const HermMat& d, std::size_t n, std::span<const cplx> eta) {
  CMatrix k(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      cplx s{};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          s += std::conj(eta[i]) * eta[j] * d(a * n + i, b * n + j);
      k(a, b) = s;
    }
  return HermMat::symmetrize(k);
}

ProductMin run_restart(const HermMat& d, std::size_t n, const SeesawParams& p, int r) {
  RngStream rng(p.seed, static_cast<std::uint64_t>(r));
  ProductMin out;
  out.restart = r;
  out.xi = random_unit_vector(n, rng);
  out.eta = random_unit_vector(n, rng);
  double prev = INFINITY;
  for (int it = 0; it < p.max_iter; ++it) {
    auto [v1, eta] = bottom_eigenpair(contract_a(d, n, out.xi));
    out.eta = std::move(eta);
    auto [v2, xi] = bottom_eigenpair(contract_b(d, n, out.eta));
    out.xi = std::move(xi);
    out.value = v2;
    if (std::abs(prev - v2) <= p.converge_tol * (1.0 + std::abs(v2))) break;
    prev = v2;
  }
  out.value = product_expectation(d, n, out.xi, out.eta);
  return out;
}

// Smallest eigenvalue of a real symmetric 4 x 4 matrix and the squared
// first component of its eigenvector, by cyclic Jacobi.
std::pair<double, double> min_eig4(std::array<double, 16> a) {
  std::array<double, 16> v{};
  for (int i = 0; i < 4; ++i) v[i * 5] = 1.0;
  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (int p = 0; p < 4; ++p) {
      diag += a[p * 5] * a[p * 5];
      for (int q = p + 1; q < 4; ++q) off += a[p * 4 + q] * a[p * 4 + q];
    }
    if (off <= 1e-30 * diag || off == 0.0) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        const double apq = a[p * 4 + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * 5] - a[p * 5]) / (2.0 * apq);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k * 4 + p], akq = a[k * 4 + q];
          a[k * 4 + p] = c * akp - s * akq;
          a[k * 4 + q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p * 4 + k], aqk = a[q * 4 + k];
          a[p * 4 + k] = c * apk - s * aqk;
          a[q * 4 + k] = s * apk + c * aqk;
          const double vkp = v[k * 4 + p], vkq = v[k * 4 + q];
          v[k * 4 + p] = c * vkp - s * vkq;
          v[k * 4 + q] = s * vkp + c * vkq;
        }
      }
  }
  int best = 0;
  for (int i = 1; i < 4; ++i)
    if (a[i * 5] < a[best * 5]) best = i;
  return {a[best * 5], v[best] * v[best]};
}

}  // namespace

bool block_positive_qubit(const HermMat& d, double tol) {
  require_same_dim(d.dim(), 4, "block_positive_qubit");
  // Blocks B_{m mu} of D; M(r) = (C_0 + sum_k r_k C_k) / 2.
  auto blk = [&](std::size_t m, std::size_t mu, std::size_t i, std::size_t j) {
    return d(m * 2 + i, mu * 2 + j);
  };
  const cplx im(0.0, 1.0);
  std::array<std::array<cplx, 4>, 4> c{};  // c[k] = (C_k)_{00}, _{01}, _{10}, _{11}
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t e = i * 2 + j;
      c[0][e] = blk(0, 0, i, j) + blk(1, 1, i, j);
      c[1][e] = blk(0, 1, i, j) + blk(1, 0, i, j);
      c[2][e] = -im * blk(0, 1, i, j) + im * blk(1, 0, i, j);
      c[3][e] = blk(0, 0, i, j) - blk(1, 1, i, j);
    }
  // Column k of G: (a_k, b_k) with C_k = a_k I + b_k . sigma.
  double g[4][4];
  for (int k = 0; k < 4; ++k) {
    g[0][k] = 0.5 * (c[k][0] + c[k][3]).real();
    g[1][k] = c[k][1].real();
    g[2][k] = -c[k][1].imag();
    g[3][k] = 0.5 * (c[k][0] - c[k][3]).real();
  }
  g[0][0] += 2.0 * tol;
  if (g[0][0] < std::hypot(g[0][1], g[0][2], g[0][3])) return false;
  std::array<double, 16> s0{};
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      s0[p * 4 + q] = g[0][p] * g[0][q] - g[1][p] * g[1][q] - g[2][p] * g[2][q] - g[3][p] * g[3][q];
  const double scale = std::max(1e-300, std::abs(s0[0]) + std::abs(s0[5]) + std::abs(s0[10]) +
                                            std::abs(s0[15]));
  // f(lambda) = lambda_min(S0 - lambda J) is concave with supergradient
  // 1 - 2 v_0^2; bisect on its sign, rejecting once the tangent lines at the
  // bracket ends bound f below zero.
  struct Point {
    double x, f, g;
  };
  auto eval = [&](double lambda) {
    std::array<double, 16> s = s0;
    s[0] -= lambda;
    for (int k = 1; k < 4; ++k) s[k * 5] += lambda;
    const auto [f, v0] = min_eig4(s);
    return Point{lambda, f, 1.0 - 2.0 * v0};
  };
  const double floor = -1e-12 * scale;
  if (s0[0] < floor) return false;
  Point lo = eval(0.0);
  if (lo.f >= floor) return true;
  if (lo.g <= 0.0) return false;
  Point hi = eval(std::max(0.0, s0[0]));
  if (hi.f >= floor) return true;
  if (hi.g >= 0.0) return false;
  for (int it = 0; it < 200; ++it) {
    const double dg = lo.g - hi.g;
    double x = 0.5 * (lo.x + hi.x);
    if (dg > 0.0) {
      const double xs = (hi.f - lo.f + lo.g * lo.x - hi.g * hi.x) / dg;
      const double upper = lo.f + lo.g * (xs - lo.x);
      if (upper < floor) return false;
      // Maximum of f known to within the floor.
      if (upper - std::max(lo.f, hi.f) <= -floor) return true;
      if (xs > lo.x && xs < hi.x) x = 0.5 * (x + xs);
    }
    if (!(x > lo.x && x < hi.x)) return false;
    const Point m = eval(x);
    if (m.f >= floor) return true;
    if (m.g > 0.0)
      lo = m;
    else if (m.g < 0.0)
      hi = m;
    else
      return false;
  }
  return false;
}

double product_expectation(const HermMat& d, std::size_t n, std::span<const cplx> xi,
                           std::span<const cplx> eta) {
  require_same_dim(d.dim(), n * n, "product_expectation");
  return expectation(d, kron(xi, eta));
}

ProductMin seesaw_min(const HermMat& d, std::size_t n, const SeesawParams& params) {
  require_same_dim(d.dim(), n * n, "seesaw_min");
  ProductMin best;
  best.value = INFINITY;
  for (int r = 0; r < params.restarts; ++r) {
    ProductMin cur = run_restart(d, n, params, r);
    if (cur.value < best.value) best = std::move(cur);
  }
  return best;
}

}  // namespace qcones
