#include "qcones/verify.hpp"

#include <cmath>
#include <numbers>

#include "qcones/bodies.hpp"
#include "qcones/eigen.hpp"
#include "qcones/fixtures.hpp"
#include "qcones/matrix_io.hpp"
#include "qcones/random.hpp"
#include "qcones/support.hpp"

namespace qcones {

double duality_pair_value(const ChoiMat& phi, const ChoiMat& psi) {
  const std::size_t n = phi.n();
  require_same_dim(psi.n(), n, "duality_pair_value");
  const double nn = static_cast<double>(n);
  for (const ChoiMat* c : {&phi, &psi})
    if (std::abs(c->trace() - nn) > 1e-9 * nn)
      throw std::invalid_argument("duality_pair_value: Choi matrix must have trace N");
  const HermMat center = depolarizing_choi(n).mat();
  return -hs_inner(phi.mat() - center, psi.mat() - center);
}

ChoiMat outer_radius_witness(const BodySpec& body) {
  const std::size_t n = body.n;
  if (body.slice == Slice::TP) return unitary_channel_choi(fourier_matrix(n));
  return {n, HermMat::unit(n * n, 0) * static_cast<double>(n)};
}

ChoiMat reflect_to_inradius(const ChoiMat& w) {
  const std::size_t n = w.n();
  const HermMat c = depolarizing_choi(n).mat();
  const double k = 1.0 / static_cast<double>(n * n - 1);
  return {n, c - (w.mat() - c) * k};
}

namespace {

// Random unit vector of the tangent space of a base or TP slice.
HermMat tangent_direction(const BodySpec& body, RngStream& rng) {
  if (body.slice == Slice::Base) return random_traceless_direction(body.n * body.n, rng);
  static thread_local std::vector<SparseHerm> basis;
  static thread_local std::size_t basis_n = 0;
  if (basis_n != body.n) {
    basis = tp_tangent_basis(body.n);
    basis_n = body.n;
  }
  const auto x = random_direction(basis.size(), rng);
  CMatrix m(body.n * body.n, body.n * body.n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [idx, v] : basis[k].entries) m.data()[idx] += x[k] * v;
  return HermMat::symmetrize(m);
}

double psd_ray(const HermMat& x, std::size_t n) {
  const double lmin = min_eigenvalue(x);
  return lmin < 0.0 ? 1.0 / (static_cast<double>(n) * -lmin) : INFINITY;
}

// Boundary point of C n {affine slice} along u from Phi_*, for the cones with
// a spectral ray formula.
HermMat ray_point(ConeId cone, const HermMat& u, std::size_t n) {
  double t = 0.0;
  switch (cone) {
    case ConeId::CP: t = psd_ray(u, n); break;
    case ConeId::CcP: t = psd_ray(partial_transpose(u, n), n); break;
    default: t = t_base_ray(u, n); break;
  }
  return depolarizing_choi(n).mat() + u * t;
}

// A point of the body built from members of its subsets.
HermMat body_point(const BodySpec& body, RngStream& rng) {
  const std::size_t n = body.n;
  const double nn = static_cast<double>(n);
  switch (body.cone) {
    case ConeId::CP:
    case ConeId::CcP:
    case ConeId::T:
      return ray_point(body.cone, tangent_direction(body, rng), n);
    case ConeId::SP: {
      const std::size_t terms = 1 + static_cast<std::size_t>(rng.uniform() * 4.0);
      std::vector<double> w(terms);
      double total = 0.0;
      for (auto& x : w) total += (x = -std::log(1.0 - rng.uniform()));
      HermMat acc = HermMat::zeros(n * n);
      for (double x : w) acc += random_product_state(n, rng) * (nn * x / total);
      return acc;
    }
    case ConeId::D:
    case ConeId::P: {
      const double lam = rng.uniform();
      HermMat p = ray_point(ConeId::CP, tangent_direction(body, rng), n) * lam +
                  ray_point(ConeId::CcP, tangent_direction(body, rng), n) * (1.0 - lam);
      if (body.cone == ConeId::P && n == 3 && body.slice == Slice::Base) {
        const double mu = rng.uniform();
        p = p * (1.0 - mu) + choi_map_n3().mat() * (0.5 * mu);
      }
      return p;
    }
  }
  return depolarizing_choi(n).mat();
}

}  // namespace

ChoiMat random_base_point(ConeId cone, std::size_t n, RngStream& rng) {
  switch (cone) {
    case ConeId::CP: return random_cp_base_point(n, rng);
    case ConeId::CcP: return partial_transpose(random_cp_base_point(n, rng));
    case ConeId::T: {
      const HermMat c = depolarizing_choi(n).mat();
      const HermMat u = random_cp_base_point(n, rng).mat() - c;
      const double un = u.hs_norm();
      if (un == 0.0) return {n, c};
      const double t = std::min(un, t_base_ray(u * (1.0 / un), n)) * rng.uniform();
      return {n, c + u * (t / un)};
    }
    case ConeId::D: {
      const double lam = rng.uniform();
      const HermMat a = random_cp_base_point(n, rng).mat();
      const HermMat b = partial_transpose(random_cp_base_point(n, rng).mat(), n);
      return {n, a * lam + b * (1.0 - lam)};
    }
    case ConeId::SP: return {n, body_point(BodySpec{ConeId::SP, n, Slice::Base, {}}, rng)};
    case ConeId::P: break;
  }
  throw UnsupportedSlice("random_base_point: no sampler for " + to_string(cone));
}

RadiiReport radii_verify(const BodySpec& body, std::size_t n_probes, std::uint64_t seed) {
  validate(body);
  if (body.slice != Slice::Base && body.slice != Slice::TP)
    throw UnsupportedSlice("radii_verify: base and TP slices only");
  if (body.slice == Slice::TP && body.cone != ConeId::CP && body.cone != ConeId::T)
    throw UnsupportedSlice("radii_verify: TP sections of CP and T only");
  const std::size_t n = body.n;
  const double d = static_cast<double>(n * n);
  RadiiReport rep;
  rep.body = body;
  rep.inradius = 1.0 / std::sqrt(d - 1.0);
  rep.outradius = std::sqrt(d - 1.0);
  const HermMat center = depolarizing_choi(n).mat();
  const double eps = 1e-6;
  const double dist_tol = 1e-9;
  RngStream rng(seed, 0x4ad11);

  for (std::size_t k = 0; k < n_probes; ++k) {
    const HermMat u = tangent_direction(body, rng);
    const ChoiMat probe(n, center + u * (rep.inradius * (1.0 - eps)));
    const Verdict v = slice_membership(probe, body);
    ++rep.in_probes;
    if (v.status != Status::In) {
      ++rep.in_failures;
      if (rep.offending.empty())
        rep.offending = "inner probe " + std::to_string(k) + " " + to_string(v.status) + ": " +
                        matrix_to_json(probe.matrix());
    }
  }

  for (std::size_t k = 0; k < n_probes; ++k) {
    HermMat x = body.slice == Slice::TP && k % 2 == 1 ? random_channel_tp(n, rng).mat()
                                                       : body_point(body, rng);
    if (body.slice == Slice::TP && k % 2 == 1 && body.cone == ConeId::T) {
      // Pull a random channel toward Phi_* until it is PPT.
      const HermMat u = x - center;
      const double un = u.hs_norm();
      const double t = std::min(1.0, t_base_ray(u * (1.0 / un), n) / un);
      x = center + u * t;
    }
    const double dist = hs_distance(x, center);
    rep.max_distance = std::max(rep.max_distance, dist);
    ++rep.out_probes;
    if (dist > rep.outradius + dist_tol) {
      ++rep.out_failures;
      if (rep.offending.empty())
        rep.offending = "outer probe " + std::to_string(k) + " at distance " + format_double(dist);
    }
  }

  const ChoiMat w = outer_radius_witness(body);
  rep.outer_witness_distance = hs_distance(w.mat(), center);
  rep.outer_witness_member = slice_membership(w, body).status == Status::In;
  rep.outer_witness_ok =
      rep.outer_witness_member && std::abs(rep.outer_witness_distance - rep.outradius) <= 1e-9;

  const ChoiMat inner = reflect_to_inradius(w);
  rep.inner_witness_distance = hs_distance(inner.mat(), center);
  rep.inner_witness_member = slice_membership(inner, body).status == Status::In;
  rep.inner_witness_ok =
      rep.inner_witness_member && std::abs(rep.inner_witness_distance - rep.inradius) <= 1e-9;
  if (!rep.outer_witness_ok && rep.offending.empty())
    rep.offending = "outer witness is not a member of " + body.name();
  return rep;
}

TraceInequality block_positive_trace_check(const ChoiMat& m, const OracleParams& params) {
  TraceInequality out;
  out.accepted = cone_membership(m, ConeId::P, params).status == Status::In;
  out.tr_sq = hs_inner(m.mat(), m.mat());
  out.sq_tr = m.trace() * m.trace();
  out.pass = out.accepted && out.tr_sq <= out.sq_tr + 1e-9;
  return out;
}

Estimate santalo_product(const Estimate& body, const Estimate& polar) {
  Estimate e;
  e.value = body.value * polar.value;
  e.stderr_ = std::hypot(body.stderr_ * polar.value, polar.stderr_ * body.value);
  e.n_samples = body.n_samples + polar.n_samples;
  e.seed = body.seed;
  return e;
}

NoDualityReport no_duality_discrepancy(std::size_t n, std::size_t n_samples, std::uint64_t seed) {
  NoDualityReport rep;
  rep.n = n;
  const double nn = static_cast<double>(n);
  const std::size_t d = n * n;
  CMatrix u(d, d), x(d, d);
  for (std::size_t j = 0; j < n; ++j) u(j, j) = -1.0 / nn;
  u(0, 0) += 1.0;
  x(0, 0) = nn;
  const HermMat uh(std::move(u)), xh(std::move(x));
  rep.numerator = hs_inner(uh, xh);
  rep.denominator_bound = 1.0 - 1.0 / nn;
  rep.ratio = rep.numerator / rep.denominator_bound;
  BodySpec base{ConeId::CP, n, Slice::Base, {}};
  rep.x_in_cp_base = slice_membership(ChoiMat(n, xh), base).status == Status::In;
  RngStream rng(seed, 0xd0a1);
  rep.max_sampled = -INFINITY;
  for (std::size_t k = 0; k < n_samples; ++k)
    rep.max_sampled = std::max(rep.max_sampled, hs_inner(uh, random_channel_tp(n, rng).mat()));
  rep.samples = n_samples;
  return rep;
}

HermMat g_m(const HermMat& d, const HermMat& m, std::size_t n) {
  require_same_dim(m.dim(), n, "g_m");
  const CMatrix s = kron(sqrt_psd(m).matrix(), CMatrix::identity(n));
  return d.congruence(s);
}

void tni_gm_checks(TniReport& rep, std::size_t n, std::size_t gm_samples, std::uint64_t seed) {
  RngStream rng(seed, 0x9f1b);
  const HermMat eye = HermMat::identity(n);
  for (std::size_t k = 0; k < gm_samples; ++k) {
    const ChoiMat ch = random_channel_tp(n, rng);
    // M uniform-ish in {0 <= M <= I}: Haar-rotated uniform spectrum.
    std::vector<double> spec(n);
    for (auto& s : spec) s = rng.uniform();
    const CMatrix v = haar_unitary(n, rng);
    const HermMat m = HermMat::diagonal(spec).congruence(v);
    const HermMat img = g_m(ch.mat(), m, n);
    rep.gm_fiber_error = std::max(rep.gm_fiber_error,
                                  max_abs_diff(partial_trace(img, n, Subsystem::B).matrix(),
                                               m.matrix()));
    rep.gm_identity_error =
        std::max(rep.gm_identity_error, max_abs_diff(g_m(ch.mat(), eye, n).matrix(),
                                                     ch.matrix()));
  }
  rep.gm_samples = gm_samples;
}

TniReport tni_experiment(std::size_t n, const VolumeSchedule& schedule, std::size_t gm_samples) {
  TniReport rep;
  const double nn = static_cast<double>(n);
  rep.bracket_lo = std::pow(std::numbers::e * std::pow(nn, 2.5), -nn * nn);
  rep.bracket_hi = std::pow(nn, -nn * nn / 2.0);
  tni_gm_checks(rep, n, gm_samples, schedule.seed);
  try {
    VolumeSchedule s = schedule;
    rep.tni = volume_mcmc(MatrixBody(BodySpec{ConeId::CP, n, Slice::TNI, {}}), s);
    s.seed = splitmix64(schedule.seed + 1);
    rep.tp = volume_mcmc(MatrixBody(BodySpec{ConeId::CP, n, Slice::TP, {}}), s);
    s.seed = splitmix64(schedule.seed + 2);
    rep.interval = volume_mcmc(MatrixBody::operator_interval(n), s);
  } catch (const MixingError& e) {
    rep.aborted = true;
    rep.message = e.what();
    return rep;
  }
  rep.log_ratio = rep.tni.log_volume - rep.tp.log_volume - rep.interval.log_volume;
  rep.log_ratio_se = std::sqrt(rep.tni.log_volume_se * rep.tni.log_volume_se +
                               rep.tp.log_volume_se * rep.tp.log_volume_se +
                               rep.interval.log_volume_se * rep.interval.log_volume_se);
  rep.ratio = std::exp(rep.log_ratio);
  rep.in_bracket = rep.ratio >= rep.bracket_lo && rep.ratio <= rep.bracket_hi;
  return rep;
}

}  // namespace qcones
