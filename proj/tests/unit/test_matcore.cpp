#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "qcones/choi.hpp"
#include "qcones/eigen.hpp"
#include "qcones/matrix_io.hpp"
#include "qcones/random.hpp"

using namespace qcones;

namespace {

HermMat diag(std::initializer_list<double> d) {
  std::vector<double> v(d);
  return HermMat::diagonal(v);
}

}  // namespace

TEST_CASE("hs inner products") {
  CHECK(hs_inner(HermMat::identity(2), HermMat::identity(2)) == doctest::Approx(2.0));
  CHECK(hs_inner(HermMat::unit(2, 0), HermMat::unit(2, 1)) == 0.0);
  CHECK(hs_inner(swap_operator(2), rho_max(2)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(hs_inner(HermMat::identity(2), HermMat::identity(3)), DimensionError);
}

TEST_CASE("hermitian constructor rejects non-hermitian input") {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermMat{m}, NotHermitianError);
}

TEST_CASE("eigh small cases") {
  auto v = eigvalsh(diag({1.0, -1.0}));
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(-1.0));
  v = eigvalsh(rho_max(2));
  CHECK(v[0] == doctest::Approx(2.0));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(v[k]) < 1e-12);
  v = eigvalsh(HermMat::identity(3) * (1.0 / 3.0));
  for (double x : v) CHECK(x == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("eigh reconstructs random hermitian matrices") {
  RngStream rng(42);
  for (std::size_t d : {2u, 4u, 9u, 16u}) {
    const HermMat h = random_hermitian_direction(d, rng);
    const Spectrum s = eigh(h);
    CHECK(max_abs_diff(s.reconstruct().matrix(), h.matrix()) < 1e-12);
    for (std::size_t k = 1; k < d; ++k) CHECK(s.values[k - 1] >= s.values[k]);
    const CMatrix v = s.vectors;
    CHECK(max_abs_diff(v.adjoint() * v, CMatrix::identity(d)) < 1e-12);
  }
}

TEST_CASE("spectral helpers") {
  const HermMat a = diag({3.0, -2.0, 0.5});
  CHECK(trace_norm(a) == doctest::Approx(5.5));
  CHECK(operator_norm(a) == doctest::Approx(3.0));
  const auto [p, q] = jordan_split(a);
  CHECK(max_abs_diff((p - q).matrix(), a.matrix()) < 1e-12);
  CHECK(min_eigenvalue(p) > -1e-12);
  CHECK(min_eigenvalue(q) > -1e-12);
  CHECK(is_psd(diag({1.0, 0.0}), 1e-12));
  CHECK_FALSE(is_psd(diag({1.0, -1e-6}), 1e-9));
  const HermMat s = sqrt_psd(diag({4.0, 9.0}));
  CHECK(s(0, 0).real() == doctest::Approx(2.0));
  CHECK(s(1, 1).real() == doctest::Approx(3.0));
  CHECK_THROWS_AS(inv_sqrt_pd(diag({1.0, 0.0})), std::domain_error);
}

TEST_CASE("partial trace") {
  RngStream rng(5);
  const HermMat a = random_state_hs(2, rng), b = random_state_hs(2, rng);
  const HermMat ab = HermMat::symmetrize(kron(a.matrix(), b.matrix()));
  CHECK(max_abs_diff(partial_trace(ab, 2, Subsystem::B).matrix(), (a * b.trace()).matrix()) <
        1e-12);
  CHECK(max_abs_diff(partial_trace(ab, 2, Subsystem::A).matrix(), (b * a.trace()).matrix()) <
        1e-12);
  for (std::size_t n : {2u, 3u}) {
    CHECK(max_abs_diff(partial_trace(rho_max(n), n, Subsystem::B).matrix(),
                       CMatrix::identity(n)) < 1e-12);
    CHECK(max_abs_diff(partial_trace(HermMat::identity(n * n), n, Subsystem::B).matrix(),
                       (HermMat::identity(n) * double(n)).matrix()) < 1e-12);
  }
}

TEST_CASE("partial transpose") {
  RngStream rng(6);
  const HermMat a = random_state_hs(3, rng), b = random_state_hs(3, rng);
  const HermMat ab = HermMat::symmetrize(kron(a.matrix(), b.matrix()));
  const CMatrix expect = kron(a.matrix(), b.matrix().transpose());
  CHECK(max_abs_diff(partial_transpose(ab, 3).matrix(), expect) < 1e-12);
  CHECK(max_abs_diff(partial_transpose(rho_max(2), 2).matrix(), swap_operator(2).matrix()) <
        1e-15);
  // SWAP exchanges e1 (x) e2 and e2 (x) e1.
  const HermMat s = swap_operator(2);
  CHECK(s(1, 2).real() == 1.0);
  CHECK(s(2, 1).real() == 1.0);
  CHECK(s(0, 0).real() == 1.0);
  CHECK(s(3, 3).real() == 1.0);
  const HermMat h = random_hermitian_direction(9, rng);
  CHECK(max_abs_diff(partial_transpose(partial_transpose(h, 3), 3).matrix(), h.matrix()) == 0.0);
}

TEST_CASE("map to choi") {
  for (std::size_t n : {2u, 3u}) {
    CHECK(max_abs_diff(map_to_choi(SuperOp::identity(n)).matrix(), rho_max(n).matrix()) == 0.0);
    CHECK(max_abs_diff(map_to_choi(SuperOp::depolarizing(n)).matrix(),
                       (HermMat::identity(n * n) * (1.0 / n)).matrix()) < 1e-15);
    CHECK(max_abs_diff(map_to_choi(SuperOp::transposition(n)).matrix(),
                       swap_operator(n).matrix()) == 0.0);
  }
}

TEST_CASE("choi round trip") {
  RngStream rng(7);
  for (int k = 0; k < 5; ++k) {
    const ChoiMat d = random_channel_tp(3, rng);
    const ChoiMat back = map_to_choi(choi_to_map(d));
    CHECK(max_abs_diff(back.matrix(), d.matrix()) == 0.0);
  }
  CHECK(max_abs_diff(choi_to_map(ChoiMat(2, rho_max(2))).matrix(),
                     SuperOp::identity(2).matrix()) == 0.0);
  const ChoiMat star(2, HermMat::identity(4) * 0.5);
  const HermMat rho = random_state_hs(2, rng);
  const HermMat out = apply_map(choi_to_map(star), rho);
  CHECK(max_abs_diff(out.matrix(), (HermMat::identity(2) * 0.5).matrix()) < 1e-15);
}

TEST_CASE("non hermiticity preserving map is rejected") {
  CMatrix m(4, 4);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(map_to_choi(SuperOp(2, m)), NotHermitianError);
}

TEST_CASE("apply map") {
  RngStream rng(8);
  const HermMat rho = random_state_hs(3, rng);
  CHECK(max_abs_diff(apply_map(SuperOp::identity(3), rho).matrix(), rho.matrix()) < 1e-15);
  CHECK(max_abs_diff(apply_map(SuperOp::depolarizing(3), rho).matrix(),
                     (HermMat::identity(3) * (1.0 / 3.0)).matrix()) < 1e-15);
  const CMatrix e12 = CMatrix::unit(2, 0, 1);
  CHECK(max_abs_diff(SuperOp::transposition(2).apply(e12), CMatrix::unit(2, 1, 0)) == 0.0);
  // The Choi route agrees with the superoperator route.
  const ChoiMat ch = random_channel_tp(3, rng);
  CHECK(max_abs_diff(apply_choi(ch, rho).matrix(), apply_map(choi_to_map(ch), rho).matrix()) <
        1e-13);
}

TEST_CASE("matrix json round trip") {
  RngStream rng(9);
  const HermMat h = random_hermitian_direction(4, rng);
  const CMatrix back = matrix_from_json(matrix_to_json(h.matrix()));
  CHECK(max_abs_diff(back, h.matrix()) == 0.0);
  CHECK_THROWS_AS(matrix_from_json("{\"dim\": 2, \"re\": [[1, 0]]}"), FormatError);
  CHECK_THROWS_AS(matrix_from_json("not json"), FormatError);
  const CMatrix real = matrix_from_json("{\"dim\": 2, \"re\": [[1, 0], [0, 2]]}");
  CHECK(real(1, 1).real() == 2.0);
}
