#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcones/choi.hpp"

namespace qcones {

/// SplitMix64 finalizer; used to derive independent engine seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seeded generator. Identical (seed, stream) pairs reproduce identical draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  /// Child stream; depends only on (seed, stream, id).
  RngStream split(std::uint64_t id) const;

  double uniform();  // [0, 1)
  double normal();
  /// Standard complex Gaussian, E|z|^2 = 1.
  cplx cnormal();
  std::uint64_t next_u64() { return eng_(); }
  std::mt19937_64& engine() noexcept { return eng_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 eng_;
  std::normal_distribution<double> gauss_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

CMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng);
/// G G^dagger / Tr(G G^dagger) with square Ginibre G.
HermMat random_state_hs(std::size_t d, RngStream& rng);
/// QR of a Ginibre matrix with R's diagonal made positive.
CMatrix haar_unitary(std::size_t d, RngStream& rng);
std::vector<cplx> random_unit_vector(std::size_t d, RngStream& rng);
/// Uniform unit direction in R^m.
std::vector<double> random_direction(std::size_t m, RngStream& rng);
/// |xi><xi| (x) |eta><eta| with independent uniform unit vectors.
HermMat random_product_state(std::size_t n, RngStream& rng);
/// Induced-measure CPTP map. Not Hilbert-Schmidt uniform on the TP section.
ChoiMat random_channel_tp(std::size_t n, RngStream& rng);
/// Hilbert-Schmidt random point of the CP base (trace N).
ChoiMat random_cp_base_point(std::size_t n, RngStream& rng);
/// Traceless Hermitian matrix with unit HS norm, Gaussian direction.
HermMat random_traceless_direction(std::size_t d, RngStream& rng);
/// Hermitian matrix with unit HS norm, isotropic Gaussian direction.
HermMat random_hermitian_direction(std::size_t d, RngStream& rng);

}  // namespace qcones
