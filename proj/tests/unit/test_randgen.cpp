#include <cmath>

#include "doctest.h"
#include "qcones/cones.hpp"
#include "qcones/eigen.hpp"
#include "qcones/random.hpp"

using namespace qcones;

TEST_CASE("ginibre moments") {
  RngStream rng(1);
  const CMatrix g = ginibre(1000, 1000, rng);
  cplx mean{};
  double sq = 0.0;
  for (const cplx& z : g.data()) {
    mean += z;
    sq += std::norm(z);
  }
  const double count = 1e6;
  mean /= count;
  sq /= count;
  // stderr of the mean of a unit-variance complex normal is 1/sqrt(count)
  CHECK(std::abs(mean) < 4.0 / std::sqrt(count));
  CHECK(sq == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("streams are reproducible and independent") {
  RngStream a(99, 3), b(99, 3), c(99, 4);
  const cplx za = ginibre(1, 1, a)(0, 0);
  CHECK(za == ginibre(1, 1, b)(0, 0));
  CHECK(za != ginibre(1, 1, c)(0, 0));
  RngStream s(99);
  CHECK(s.split(1).next_u64() == RngStream(99).split(1).next_u64());
  CHECK(s.split(1).next_u64() != s.split(2).next_u64());
}

TEST_CASE("hilbert-schmidt states") {
  RngStream rng(2);
  HermMat mean = HermMat::zeros(4);
  const int draws = 100000;
  for (int k = 0; k < draws; ++k) {
    const HermMat rho = random_state_hs(4, rng);
    if (k < 200) {
      CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(is_psd(rho, 1e-12));
    }
    mean += rho;
  }
  mean *= 1.0 / draws;
  CHECK(max_abs_diff(mean.matrix(), (HermMat::identity(4) * 0.25).matrix()) < 1e-2);
  const HermMat one = random_state_hs(1, rng);
  CHECK(one(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("haar unitaries") {
  RngStream rng(3);
  const CMatrix u = haar_unitary(5, rng);
  CHECK(max_abs_diff(u * u.adjoint(), CMatrix::identity(5)) < 1e-10);
  const std::size_t d = 3;
  const int draws = 100000;
  double s = 0.0, s2 = 0.0;
  for (int k = 0; k < draws; ++k) {
    const double x = std::norm(haar_unitary(d, rng)(0, 0));
    s += x;
    s2 += x * x;
  }
  const double mean = s / draws;
  const double se = std::sqrt((s2 / draws - mean * mean) / draws);
  CHECK(std::abs(mean - 1.0 / d) < 3.0 * se);
  CHECK(std::abs(std::abs(haar_unitary(1, rng)(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("random channels") {
  RngStream rng(4);
  const BodySpec tp{ConeId::CP, 3, Slice::TP, {}};
  for (int k = 0; k < 50; ++k) {
    const ChoiMat d = random_channel_tp(3, rng);
    CHECK(slice_membership(d, tp).status == Status::In);
    CHECK(std::abs(d.trace() - 3.0) < 1e-10);
  }
  HermMat mean = HermMat::zeros(4);
  const int draws = 10000;
  for (int k = 0; k < draws; ++k) mean += random_channel_tp(2, rng).mat();
  mean *= 1.0 / draws;
  CHECK(max_abs_diff(partial_trace(mean, 2, Subsystem::B).matrix(), CMatrix::identity(2)) < 1e-10);
  CHECK(max_abs_diff(mean.matrix(), (HermMat::identity(4) * 0.5).matrix()) < 2e-2);
}

TEST_CASE("random product states") {
  RngStream rng(5);
  for (int k = 0; k < 20; ++k) {
    const HermMat p = random_product_state(3, rng);
    CHECK(p.trace() == doctest::Approx(1.0));
    const auto v = eigvalsh(p);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(std::abs(v[1]) < 1e-12);
    CHECK(is_psd(partial_transpose(p, 3), 1e-12));
  }
}

TEST_CASE("random directions are unit and traceless") {
  RngStream rng(6);
  const HermMat u = random_traceless_direction(9, rng);
  CHECK(u.hs_norm() == doctest::Approx(1.0));
  CHECK(std::abs(u.trace()) < 1e-12);
  const auto x = random_direction(7, rng);
  double s = 0.0;
  for (double v : x) s += v * v;
  CHECK(s == doctest::Approx(1.0));
}
