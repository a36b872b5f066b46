#include "qcones/random.hpp"

#include <cmath>

#include "qcones/eigen.hpp"

namespace qcones {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), eng_(splitmix64(seed ^ splitmix64(stream + 1))) {}

RngStream RngStream::split(std::uint64_t id) const {
  return RngStream(splitmix64(seed_ + 0x632be59bd9b4e019ULL * (stream_ + 1)), id);
}

double RngStream::uniform() { return unif_(eng_); }
double RngStream::normal() { return gauss_(eng_); }

cplx RngStream::cnormal() {
  const double re = gauss_(eng_);
  const double im = gauss_(eng_);
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

CMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng) {
  CMatrix g(rows, cols);
  for (auto& z : g.data()) z = rng.cnormal();
  return g;
}

HermMat random_state_hs(std::size_t d, RngStream& rng) {
  const CMatrix g = ginibre(d, d, rng);
  HermMat w = HermMat::symmetrize(g * g.adjoint());
  return w * (1.0 / w.trace());
}

CMatrix haar_unitary(std::size_t d, RngStream& rng) {
  // Modified Gram-Schmidt on the columns is QR with a positive R diagonal.
  CMatrix q = ginibre(d, d, rng);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj{};
      for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < d; ++i) q(i, k) -= proj * q(i, j);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < d; ++i) nrm += std::norm(q(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < d; ++i) q(i, k) /= nrm;
  }
  return q;
}

std::vector<cplx> random_unit_vector(std::size_t d, RngStream& rng) {
  std::vector<cplx> v(d);
  for (auto& z : v) z = rng.cnormal();
  const double nrm = vec_norm(v);
  for (auto& z : v) z /= nrm;
  return v;
}

std::vector<double> random_direction(std::size_t m, RngStream& rng) {
  std::vector<double> v(m);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& x : v) {
      x = rng.normal();
      s += x * x;
    }
  } while (s == 0.0);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& x : v) x *= inv;
  return v;
}

HermMat random_product_state(std::size_t n, RngStream& rng) {
  const auto xi = random_unit_vector(n, rng);
  const auto eta = random_unit_vector(n, rng);
  return HermMat::projector(kron(std::span<const cplx>(xi), std::span<const cplx>(eta)));
}

ChoiMat random_channel_tp(std::size_t n, RngStream& rng) {
  for (;;) {
    const CMatrix g = ginibre(n * n, n * n, rng);
    const HermMat w = HermMat::symmetrize(g * g.adjoint());
    const HermMat y = partial_trace(w, n, Subsystem::B);
    if (min_eigenvalue(y) <= 1e-12 * y.trace()) continue;
    const CMatrix s = kron(inv_sqrt_pd(y).matrix(), CMatrix::identity(n));
    return {n, w.congruence(s)};
  }
}

ChoiMat random_cp_base_point(std::size_t n, RngStream& rng) {
  return {n, random_state_hs(n * n, rng) * static_cast<double>(n)};
}

HermMat random_traceless_direction(std::size_t d, RngStream& rng) {
  const CMatrix g = ginibre(d, d, rng);
  HermMat h = HermMat::symmetrize(g + g.adjoint());
  h -= HermMat::identity(d) * (h.trace() / static_cast<double>(d));
  return h * (1.0 / h.hs_norm());
}

HermMat random_hermitian_direction(std::size_t d, RngStream& rng) {
  const CMatrix g = ginibre(d, d, rng);
  const HermMat h = HermMat::symmetrize(g + g.adjoint());
  return h * (1.0 / h.hs_norm());
}

}  // namespace qcones
