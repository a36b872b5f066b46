#include <cmath>

#include "doctest.h"
#include "qcones/cones.hpp"
#include "qcones/eigen.hpp"
#include "qcones/fixtures.hpp"
#include "qcones/random.hpp"
#include "qcones/support.hpp"

using namespace qcones;

namespace {

ChoiMat identity_choi(std::size_t n) { return {n, rho_max(n)}; }
ChoiMat transposition_choi(std::size_t n) { return {n, swap_operator(n)}; }

OracleParams light_params() {
  OracleParams p;
  p.sep_pool_size = 4000;
  return p;
}

}  // namespace

TEST_CASE("cone names round trip") {
  for (ConeId c : kAllCones) CHECK(parse_cone(to_string(c)) == c);
  for (Slice s : {Slice::Cone, Slice::Base, Slice::TP, Slice::TNI, Slice::Sym, Slice::SymPolar})
    CHECK(parse_slice(to_string(s)) == s);
  CHECK_FALSE(parse_cone("XX").has_value());
}

TEST_CASE("duality and inclusion tables") {
  CHECK(dual_cone(ConeId::CP) == ConeId::CP);
  CHECK(dual_cone(ConeId::CcP) == ConeId::CcP);
  CHECK(dual_cone(ConeId::T) == ConeId::D);
  CHECK(dual_cone(ConeId::D) == ConeId::T);
  CHECK(dual_cone(ConeId::P) == ConeId::SP);
  CHECK(dual_cone(ConeId::SP) == ConeId::P);
  CHECK(cone_subset(ConeId::SP, ConeId::P));
  CHECK(cone_subset(ConeId::T, ConeId::CcP));
  CHECK_FALSE(cone_subset(ConeId::CP, ConeId::CcP));
}

TEST_CASE("identity map memberships") {
  const ChoiMat d = identity_choi(2);
  CHECK(cone_membership(d, ConeId::CP).status == Status::In);
  const Verdict t = cone_membership(d, ConeId::T);
  REQUIRE(t.status == Status::Out);
  const auto* cert = std::get_if<EigenCertificate>(&t.certificate);
  REQUIRE(cert != nullptr);
  CHECK(cert->partial_transpose);
  CHECK(cert->value == doctest::Approx(-1.0));
  // Antisymmetric vector (e01 - e10) / sqrt 2, up to phase.
  CHECK(std::abs(cert->vector[0]) < 1e-12);
  CHECK(std::abs(cert->vector[3]) < 1e-12);
  CHECK(std::abs(cert->vector[1] + cert->vector[2]) < 1e-12);
  CHECK(std::abs(cert->vector[1]) == doctest::Approx(M_SQRT1_2));
  CHECK(verify_certificate(d, ConeId::T, t));
}

TEST_CASE("transposition map memberships") {
  const ChoiMat d = transposition_choi(2);
  const Verdict cp = cone_membership(d, ConeId::CP);
  CHECK(cp.status == Status::Out);
  CHECK(verify_certificate(d, ConeId::CP, cp));
  CHECK(cone_membership(d, ConeId::CcP).status == Status::In);
  const Verdict p = cone_membership(d, ConeId::P);
  CHECK(p.status == Status::In);
  CHECK_FALSE(p.heuristic);
  // SWAP is in CcP, so D holds with a split certificate.
  const Verdict dd = cone_membership(d, ConeId::D);
  CHECK(dd.status == Status::In);
  CHECK(verify_certificate(d, ConeId::D, dd));
}

TEST_CASE("isotropic family threshold") {
  CHECK(cone_membership(isotropic_choi(2, 0.30), ConeId::T).status == Status::In);
  const Verdict out = cone_membership(isotropic_choi(2, 0.40), ConeId::T);
  CHECK(out.status == Status::Out);
  CHECK(verify_certificate(isotropic_choi(2, 0.40), ConeId::T, out));
  // (1-p)/2 - p at p = 0.4
  CHECK(out.margin == doctest::Approx(-0.1));
}

TEST_CASE("depolarizing map is separable") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const Verdict v = cone_membership(depolarizing_choi(n), ConeId::SP, light_params());
    CHECK(v.status == Status::In);
    CHECK((std::holds_alternative<BallCertificate>(v.certificate) || n == 2));
  }
}

TEST_CASE("product states are separable at N = 3") {
  RngStream rng(11);
  for (int k = 0; k < 5; ++k) {
    const ChoiMat d(3, random_product_state(3, rng) * 3.0);
    const Verdict v = cone_membership(d, ConeId::SP, light_params());
    CHECK(v.status == Status::In);
    CHECK(verify_certificate(d, ConeId::SP, v, 1e-6));
    CHECK(is_psd(partial_transpose(d.mat(), 3), 1e-12));
  }
}

TEST_CASE("SP equals T at N = 2") {
  RngStream rng(12);
  for (int k = 0; k < 200; ++k) {
    const ChoiMat d = random_cp_base_point(2, rng);
    CHECK(cone_membership(d, ConeId::SP).status == cone_membership(d, ConeId::T).status);
  }
}

TEST_CASE("decomposable split") {
  const SplitResult psd = decomposable_split(identity_choi(2));
  CHECK(psd.success);
  CHECK(max_abs_diff(psd.a.matrix(), rho_max(2).matrix()) < 1e-14);
  CHECK(psd.b.hs_norm() < 1e-14);

  const SplitResult sw = decomposable_split(transposition_choi(2));
  CHECK(sw.success);
  CHECK(min_eigenvalue(sw.a) > -1e-8);
  CHECK(min_eigenvalue(sw.b) > -1e-8);
  const HermMat rebuilt = sw.a + partial_transpose(sw.b, 2);
  CHECK(max_abs_diff(rebuilt.matrix(), swap_operator(2).matrix()) < 1e-7);

  RngStream rng(13);
  for (int k = 0; k < 10; ++k) {
    const HermMat a = random_state_hs(9, rng), b = random_state_hs(9, rng);
    const ChoiMat d(3, a + partial_transpose(b, 3));
    const SplitResult r = decomposable_split(d);
    CHECK(r.success);
    CHECK(r.residual < 1e-6);
  }
}

TEST_CASE("non-decomposable fixture") {
  const ChoiMat fx = choi_map_n3();
  const FixtureValidation val = validate_nondecomposable_fixture(fx);
  CHECK(val.ok());
  CHECK(val.min_eigenvalue == doctest::Approx(-1.0));
  SplitParams sp;
  sp.max_iter = 20000;
  const SplitResult r = decomposable_split(fx, sp);
  CHECK_FALSE(r.success);
  CHECK(r.plateau);
  const DualWitness w = decomposable_dual_witness(fx);
  REQUIRE(w.valid);
  CHECK(w.value < 0.0);
  CHECK(min_eigenvalue(w.w) > -1e-9);
  CHECK(min_eigenvalue(partial_transpose(w.w, 3)) > -1e-9);
  const Verdict v = cone_membership(fx, ConeId::D);
  CHECK(v.status == Status::Out);
  CHECK(verify_certificate(fx, ConeId::D, v));
  const Verdict p = cone_membership(fx, ConeId::P);
  CHECK(p.status == Status::In);
  CHECK(p.heuristic);
}

TEST_CASE("fixture file matches the built-in matrix") {
  const ChoiMat file = load_choi_json(fixture_path("choi_map_n3.json"));
  CHECK(max_abs_diff(file.matrix(), choi_map_n3().matrix()) == 0.0);
}

TEST_CASE("slice memberships") {
  CHECK(slice_membership(identity_choi(2), BodySpec{ConeId::CP, 2, Slice::TP, {}}).status ==
        Status::In);
  CHECK(slice_membership(ChoiMat(2, HermMat::identity(4) * 0.5),
                         BodySpec{ConeId::CP, 2, Slice::Base, {}})
            .status == Status::In);
  const Verdict off = slice_membership(ChoiMat(2, HermMat::identity(4)),
                                       BodySpec{ConeId::CP, 2, Slice::Base, {}});
  CHECK(off.status == Status::Out);
  CHECK(std::holds_alternative<SliceCertificate>(off.certificate));

  const BodySpec polar{ConeId::CP, 2, Slice::SymPolar, {}};
  CHECK(slice_membership(ChoiMat(2, HermMat::zeros(4)), polar).status == Status::In);
  CHECK(slice_membership(ChoiMat(2, HermMat::unit(4, 0) * 0.6), polar).status == Status::Out);

  const BodySpec sym{ConeId::CP, 2, Slice::Sym, {}};
  CHECK(slice_membership(ChoiMat(2, HermMat::unit(4, 0) * -2.0), sym).status == Status::In);
  CHECK(slice_membership(ChoiMat(2, HermMat::unit(4, 0) * -2.1), sym).status == Status::Out);

  const BodySpec tni{ConeId::CP, 2, Slice::TNI, {}};
  CHECK(slice_membership(identity_choi(2), tni).status == Status::In);
  CHECK(slice_membership(ChoiMat(2, rho_max(2) * 1.01), tni).status == Status::Out);
  CHECK_THROWS_AS(validate(BodySpec{ConeId::T, 2, Slice::TNI, {}}), UnsupportedSlice);
}

TEST_CASE("verdict json") {
  const std::string j = verdict_to_json(cone_membership(isotropic_choi(2, 0.4), ConeId::T));
  CHECK(j.find("\"status\"") != std::string::npos);
  CHECK(j.find("Out") != std::string::npos);
}

TEST_CASE("support functions at N = 2") {
  const double s3 = std::sqrt(3.0);
  const HermMat u0 = (swap_operator(2) - HermMat::identity(4) * 0.5) * (1.0 / s3);
  CHECK(support_function(u0, BodySpec{ConeId::CP, 2, Slice::Base, {}}).upper ==
        doctest::Approx(1.0 / s3));
  CHECK(support_function(u0, BodySpec{ConeId::CcP, 2, Slice::Base, {}}).upper ==
        doctest::Approx(s3));
  const SupportValue hd = support_function(u0, BodySpec{ConeId::D, 2, Slice::Base, {}});
  CHECK(hd.exact);
  CHECK(hd.upper == doctest::Approx(s3));
  std::vector<double> dg{0.5, 0.5, -0.5, -0.5};
  const HermMat u = HermMat::diagonal(dg);
  CHECK(support_function(u, BodySpec{ConeId::CP, 2, Slice::Base, {}}).upper ==
        doctest::Approx(1.0));
}

TEST_CASE("support function brackets are ordered") {
  RngStream rng(14);
  for (int k = 0; k < 20; ++k) {
    const HermMat u = random_traceless_direction(4, rng);
    const double cp = support_function(u, BodySpec{ConeId::CP, 2, Slice::Base, {}}).upper;
    const SupportValue t = support_function(u, BodySpec{ConeId::T, 2, Slice::Base, {}});
    const SupportValue sp = support_function(u, BodySpec{ConeId::SP, 2, Slice::Base, {}});
    const SupportValue p = support_function(u, BodySpec{ConeId::P, 2, Slice::Base, {}});
    const double d = support_function(u, BodySpec{ConeId::D, 2, Slice::Base, {}}).upper;
    CHECK(t.lower <= t.upper + 1e-12);
    CHECK(t.upper <= cp + 1e-12);
    CHECK(sp.lower <= t.upper + 1e-9);
    CHECK(d >= cp - 1e-12);
    CHECK(p.lower >= d - 1e-6);
    // Inradius ball lies in every base.
    CHECK(sp.lower >= 1.0 / std::sqrt(3.0) - 1e-9);
  }
}
