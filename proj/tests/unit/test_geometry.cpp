#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "doctest.h"
#include "qcones/bodies.hpp"
#include "qcones/eigen.hpp"
#include "qcones/sample_dump.hpp"
#include "qcones/special.hpp"
#include "qcones/verify.hpp"
#include "qcones/volume.hpp"
#include "qcones/walk.hpp"
#include "qcones/width.hpp"

using namespace qcones;

// Values frozen from tests/oracle/derived_values.py (mpmath, 40 digits).
namespace frozen {
constexpr double vrad_states_4 = 0.42798057521565404;
constexpr double vrad_cp_base_2 = 0.85596115043130808;
constexpr double vrad_cube = 1.2407009817988;
constexpr double bmk_3_2 = 0.87358046473629887;
constexpr double bmk_2_1 = 0.88622692545275801;
constexpr double cube_section_lo = 0.85738275810499171;
constexpr double cube_section_hi = 1.9544100476116797;
constexpr double cube_section_exact = 1.1283791670955126;
constexpr double cp_tp_section_lo = 0.57377544973628409;
constexpr double cp_tp_section_hi = 1.2575441042353955;
constexpr double santalo_cube = 0.84713085763741934;
}  // namespace frozen

TEST_CASE("state volumes") {
  CHECK(exact_vol_states(2) == doctest::Approx(std::numbers::pi * std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(vrad_states(2) == doctest::Approx(M_SQRT1_2).epsilon(1e-14));
  CHECK(vrad_states(4) == doctest::Approx(frozen::vrad_states_4).epsilon(1e-13));
  CHECK(2.0 * vrad_states(4) == doctest::Approx(frozen::vrad_cp_base_2).epsilon(1e-13));
  CHECK(std::isfinite(log_vol_states(60)));
  CHECK_THROWS(log_vol_states(1));
}

TEST_CASE("ball volumes") {
  CHECK(ball_vol(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-14));
  CHECK(vrad_from_vol(ball_vol(3), 3) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(vrad_from_vol(8.0, 3) == doctest::Approx(frozen::vrad_cube).epsilon(1e-12));
  CHECK(std::isfinite(log_ball_vol(10000)));
}

TEST_CASE("b(m, k)") {
  CHECK(bmk(3, 2) == doctest::Approx(frozen::bmk_3_2).epsilon(1e-13));
  CHECK(bmk(2, 1) == doctest::Approx(frozen::bmk_2_1).epsilon(1e-13));
  for (std::size_t m : {2u, 3u, 15u, 100u, 1000u, 10000u})
    for (std::size_t k : {std::size_t{1}, m / 2, m - 1}) {
      if (k < 1 || k >= m) continue;
      CHECK(bmk(m, k) > M_SQRT1_2);
      CHECK(bmk(m, k) < 1.0);
    }
}

TEST_CASE("section bounds") {
  const SectionBounds cube = section_bounds(frozen::vrad_cube, 1.0, std::sqrt(3.0), 3, 2);
  CHECK(cube.lo == doctest::Approx(frozen::cube_section_lo).epsilon(1e-12));
  CHECK(cube.hi == doctest::Approx(frozen::cube_section_hi).epsilon(1e-12));
  CHECK(cube.lo <= frozen::cube_section_exact);
  CHECK(frozen::cube_section_exact <= cube.hi);
  const SectionBounds cp = section_bounds(frozen::vrad_cp_base_2, 1.0 / std::sqrt(3.0),
                                          std::sqrt(3.0), 15, 12);
  CHECK(cp.lo == doctest::Approx(frozen::cp_tp_section_lo).epsilon(1e-12));
  CHECK(cp.hi == doctest::Approx(frozen::cp_tp_section_hi).epsilon(1e-12));
  // A ball section is a ball of the same radius.
  const SectionBounds ball = section_bounds(0.7, 0.7, 0.7, 10, 4);
  CHECK(ball.lo <= 0.7 + 1e-12);
  CHECK(ball.hi >= 0.7 - 1e-12);
}

TEST_CASE("tangent bases are orthonormal") {
  for (const auto& basis : {hermitian_basis(3), traceless_basis(4), tp_tangent_basis(2)}) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double ip = hs_inner(basis[i].dense(), basis[j].dense());
        CHECK(ip == doctest::Approx(i == j ? 1.0 : 0.0));
      }
  }
  CHECK(tp_tangent_basis(2).size() == 12);
  for (const auto& b : tp_tangent_basis(3))
    CHECK(partial_trace(b.dense(), 3, Subsystem::B).hs_norm() < 1e-14);
}

TEST_CASE("slice geometry") {
  const SliceGeometry g = slice_geometry(BodySpec{ConeId::CP, 2, Slice::Base, {}});
  CHECK(g.inradius == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(g.outradius == doctest::Approx(std::sqrt(3.0)));
  const SliceGeometry g3 = slice_geometry(BodySpec{ConeId::CP, 3, Slice::Base, {}});
  CHECK(g3.inradius == doctest::Approx(1.0 / std::sqrt(8.0)));
  CHECK(g3.outradius == doctest::Approx(std::sqrt(8.0)));
  CHECK_THROWS_AS(slice_geometry(BodySpec{ConeId::CP, 2, Slice::Cone, {}}), UnsupportedSlice);
  // The TNI inner ball lies inside the body.
  const BodySpec tni{ConeId::CP, 2, Slice::TNI, {}};
  const MatrixBody body(tni);
  RngStream rng(3);
  for (int k = 0; k < 200; ++k) {
    auto x = random_direction(body.dim(), rng);
    for (double& v : x) v *= body.inradius() * (1.0 - 1e-9);
    CHECK(body.contains(x));
  }
}

TEST_CASE("hit-and-run on the Bloch ball") {
  const MatrixBody bloch = MatrixBody::states(2);
  WalkState s = walk_start(bloch);
  RngStream rng(17);
  double acc = 0.0;
  const int steps = 100000;
  for (int k = 0; k < steps; ++k) {
    hit_and_run_step(bloch, s, rng);
    acc += norm_sq(s.x);
  }
  // r^2 m / (m + 2) = (1/2)(3/5)
  CHECK(acc / steps == doctest::Approx(0.3).epsilon(0.02));
  CHECK(s.stuck == 0);
}

TEST_CASE("hit-and-run stays in the CP base and TP section") {
  RngStream rng(18);
  {
    const MatrixBody body(BodySpec{ConeId::CP, 2, Slice::Base, {}});
    WalkState s = walk_start(body);
    for (int k = 0; k < 2000; ++k) {
      hit_and_run_step(body, s, rng);
      const HermMat d = body.to_matrix(s.x);
      CHECK(std::abs(d.trace() - 2.0) < 1e-12);
      CHECK(min_eigenvalue(d) > -1e-8);
    }
  }
  {
    const MatrixBody body(BodySpec{ConeId::CP, 2, Slice::TP, {}});
    WalkState s = walk_start(body);
    double drift = 0.0;
    for (int k = 0; k < 100000; ++k) {
      hit_and_run_step(body, s, rng);
      if (k % 100 == 0) {
        const HermMat d = body.to_matrix(s.x);
        drift = std::max(drift, hs_distance(partial_trace(d, 2, Subsystem::B),
                                            HermMat::identity(2)));
      }
    }
    CHECK(drift <= 1e-8);
  }
}

TEST_CASE("coordinates round trip") {
  const MatrixBody body(BodySpec{ConeId::T, 2, Slice::TP, {}});
  RngStream rng(19);
  const auto x = random_direction(body.dim(), rng);
  const auto back = body.to_coords(body.to_matrix(x));
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == doctest::Approx(x[i]));
}

TEST_CASE("volume of simple bodies") {
  VolumeSchedule s;
  s.seed = 5;
  const VolumeResult cube = volume_mcmc(CubeBody(3, 1.0), s);
  CHECK(std::exp(cube.log_volume) == doctest::Approx(8.0).epsilon(0.05));
  const VolumeResult bloch = volume_mcmc(MatrixBody::states(2), s);
  CHECK(bloch.vrad.value == doctest::Approx(M_SQRT1_2).epsilon(0.03));
  const VolumeResult ball = volume_mcmc(BallBody(6, 2.0), s);
  CHECK(ball.vrad.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("volume runs are reproducible") {
  VolumeSchedule s;
  s.seed = 6;
  s.samples_per_phase = 100;
  const VolumeResult a = volume_mcmc(CrossPolytopeBody(4, 1.0), s);
  const VolumeResult b = volume_mcmc(CrossPolytopeBody(4, 1.0), s);
  CHECK(a.vrad.value == b.vrad.value);
  CHECK(a.vrad.stderr_ == b.vrad.stderr_);
  // vol = 2^4 / 4!
  CHECK(std::exp(a.log_volume) == doctest::Approx(16.0 / 24.0).epsilon(0.1));
}

TEST_CASE("mean width") {
  const WidthResult ball =
      mean_width_mc(5, [](std::span<const double>) { return 0.8; }, 1000, 1);
  CHECK(ball.upper.value == doctest::Approx(0.8));
  const WidthResult polar =
      mean_width_mc(5, [](std::span<const double>) { return 1.0 / 0.8; }, 1000, 1);
  const UrysohnBracket br = urysohn_bracket(ball, polar);
  CHECK(br.lower == doctest::Approx(0.8));
  CHECK(br.upper == doctest::Approx(0.8));
  // Cube [-1,1]^3: h(u) = |u|_1, mean 3/2.
  const WidthResult cube = mean_width_mc(
      3,
      [](std::span<const double> u) { return std::abs(u[0]) + std::abs(u[1]) + std::abs(u[2]); },
      20000, 2);
  CHECK(std::abs(cube.upper.value - 1.5) < 4.0 * cube.upper.stderr_);

  const WidthResult cp = mean_width_mc(BodySpec{ConeId::CP, 2, Slice::Base, {}}, 400, 3);
  CHECK_FALSE(cp.interval);
  CHECK(cp.upper.value <= 2.0 + 3.0 * cp.upper.stderr_);
  const WidthResult t = mean_width_mc(BodySpec{ConeId::T, 2, Slice::Base, {}}, 100, 3);
  CHECK(t.interval);
  CHECK(t.lower.value <= t.upper.value);
  CHECK(polar_base(BodySpec{ConeId::P, 2, Slice::Base, {}}).cone == ConeId::SP);
}

TEST_CASE("duality pair values") {
  const ChoiMat e11(2, HermMat::unit(4, 0) * 2.0), e22(2, HermMat::unit(4, 1) * 2.0);
  CHECK(duality_pair_value(e11, e22) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(duality_pair_value(e11, e11) == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(std::abs(duality_pair_value(depolarizing_choi(2), depolarizing_choi(2))) < 1e-15);
  CHECK_THROWS_AS(duality_pair_value(e11, ChoiMat(2, HermMat::identity(4))), std::invalid_argument);
  RngStream rng(20);
  for (int k = 0; k < 2000; ++k)
    CHECK(duality_pair_value(random_cp_base_point(3, rng), random_cp_base_point(3, rng)) <=
          1.0 + 1e-9);
}

TEST_CASE("radii at N = 2") {
  const RadiiReport r = radii_verify(BodySpec{ConeId::CP, 2, Slice::Base, {}}, 50, 1);
  CHECK(r.pass());
  CHECK(r.inradius == doctest::Approx(0.57735026918962584));
  CHECK(r.outradius == doctest::Approx(1.7320508075688772));
  CHECK(r.outer_witness_distance == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  const RadiiReport t = radii_verify(BodySpec{ConeId::T, 2, Slice::TP, {}}, 20, 1);
  CHECK_FALSE(t.outer_witness_member);
  CHECK(t.in_failures == 0);
  CHECK(t.out_failures == 0);
}

TEST_CASE("block-positive trace inequality") {
  const TraceInequality sw = block_positive_trace_check(ChoiMat(2, swap_operator(2)));
  CHECK(sw.accepted);
  CHECK(sw.pass);
  CHECK(sw.tr_sq == doctest::Approx(4.0));
  CHECK(sw.sq_tr == doctest::Approx(4.0));
  RngStream rng(21);
  const HermMat rho = random_state_hs(4, rng);
  const TraceInequality st = block_positive_trace_check(ChoiMat(2, rho));
  CHECK(st.pass);
  CHECK(st.tr_sq <= 1.0);
}

TEST_CASE("santalo products") {
  Estimate cube{vrad_from_vol(8.0, 3), 0.0, 0, 0, 0.0};
  Estimate cross{vrad_from_vol(4.0 / 3.0, 3), 0.0, 0, 0, 0.0};
  CHECK(santalo_product(cube, cross).value == doctest::Approx(frozen::santalo_cube).epsilon(1e-12));
  Estimate ball{0.5, 0.01, 0, 0, 0.0}, polar{2.0, 0.04, 0, 0, 0.0};
  const Estimate p = santalo_product(ball, polar);
  CHECK(p.value == doctest::Approx(1.0));
  CHECK(p.stderr_ == doctest::Approx(std::hypot(0.01 * 2.0, 0.04 * 0.5)));
  Estimate cp{frozen::vrad_cp_base_2, 0.0, 0, 0, 0.0};
  CHECK(santalo_product(cp, cp).value <= 1.0);
}

TEST_CASE("no-duality witness") {
  for (std::size_t n : {2u, 3u}) {
    const NoDualityReport r = no_duality_discrepancy(n, 500, 4);
    CHECK(r.numerator == doctest::Approx(double(n) - 1.0));
    CHECK(r.denominator_bound == doctest::Approx(1.0 - 1.0 / n));
    CHECK(r.ratio >= double(n) - 1e-9);
    CHECK(r.x_in_cp_base);
    CHECK(r.max_sampled <= r.denominator_bound + 1e-9);
  }
}

TEST_CASE("g_M fibers") {
  TniReport r;
  tni_gm_checks(r, 2, 1000, 7);
  CHECK(r.gm_fiber_error <= 1e-9);
  CHECK(r.gm_identity_error <= 1e-9);
  r = TniReport{};
  tni_gm_checks(r, 3, 100, 8);
  CHECK(r.gm_fiber_error <= 1e-9);
}

TEST_CASE("sample dump round trip") {
  RngStream rng(22);
  std::vector<HermMat> samples;
  for (int k = 0; k < 5; ++k) samples.push_back(random_state_hs(4, rng));
  const auto dir = std::filesystem::temp_directory_path() / "qcones_test_dump";
  std::filesystem::create_directories(dir);
  const SampleHeader h{"M_4^tot", 99, 4, samples.size(), 123};
  write_sample_dump(dir / "s.bin", h, samples);
  const SampleDump back = read_sample_dump(dir / "s.bin");
  CHECK(back.header.body == "M_4^tot");
  CHECK(back.header.seed == 99);
  CHECK(back.header.steps == 123);
  REQUIRE(back.samples.size() == samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k)
    CHECK(max_abs_diff(back.samples[k].matrix(), samples[k].matrix()) == 0.0);
  write_sample_observables(dir / "s.csv", HermMat::identity(4) * 0.25, samples);
  std::ifstream csv(dir / "s.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "index,trace,distance,lambda_min\r");
  std::ofstream(dir / "bad.bin") << "garbage";
  CHECK_THROWS(read_sample_dump(dir / "bad.bin"));
  std::filesystem::remove_all(dir);
}
