#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcones/cones.hpp"
#include "qcones/estimate.hpp"
#include "qcones/random.hpp"
#include "qcones/volume.hpp"

namespace qcones {

/// <-(D_Phi - D_*), D_Psi - D_*>_HS for two trace-N Choi matrices. At most 1
/// when Phi in C^b and Psi in (C*)^b.
double duality_pair_value(const ChoiMat& phi, const ChoiMat& psi);

/// Random point of C^b for the duality experiments. CP and CcP use the HS
/// ensemble, T pulls a CP point toward Phi_* until it is PPT, D mixes a CP and
/// a CcP point, SP mixes product states. P has no sampler.
ChoiMat random_base_point(ConeId cone, std::size_t n, RngStream& rng);

struct RadiiReport {
  BodySpec body;
  double inradius = 0.0;
  double outradius = 0.0;
  std::size_t in_probes = 0;
  std::size_t in_failures = 0;
  std::size_t out_probes = 0;
  std::size_t out_failures = 0;
  double max_distance = 0.0;
  double outer_witness_distance = 0.0;
  bool outer_witness_member = false;
  bool outer_witness_ok = false;
  double inner_witness_distance = 0.0;
  bool inner_witness_member = false;
  bool inner_witness_ok = false;
  /// First offending probe, if any.
  std::string offending;
  bool pass() const {
    return in_failures == 0 && out_failures == 0 && outer_witness_ok && inner_witness_ok;
  }
};

/// Inradius (N^2 - 1)^{-1/2} and outradius (N^2 - 1)^{1/2} about Phi_* for a
/// base or TP section: n_probes inner points at (1 - 1e-6) r along random
/// tangent directions must be members, n_probes body points must lie within
/// R, and the analytic witnesses must attain both radii within 1e-9.
RadiiReport radii_verify(const BodySpec& body, std::size_t n_probes, std::uint64_t seed);

/// Outer witness of the radii check: N |00><00| for bases, the Fourier
/// unitary channel for TP sections.
ChoiMat outer_radius_witness(const BodySpec& body);
/// Phi_* - (W - Phi_*) / (N^2 - 1).
ChoiMat reflect_to_inradius(const ChoiMat& w);

struct TraceInequality {
  bool accepted = false;
  double tr_sq = 0.0;      // Tr M^2
  double sq_tr = 0.0;      // (Tr M)^2
  bool pass = false;
};
/// Tr M^2 <= (Tr M)^2 + 1e-9 for M accepted as block positive.
TraceInequality block_positive_trace_check(const ChoiMat& m, const OracleParams& params = {});

/// vrad(K) vrad(K°) with first-order error propagation.
Estimate santalo_product(const Estimate& body, const Estimate& polar);

struct NoDualityReport {
  std::size_t n = 0;
  double numerator = 0.0;            // <u, x>
  double denominator_bound = 0.0;    // 1 - 1/N
  double ratio = 0.0;
  double max_sampled = 0.0;          // max <u, Y> over sampled TP channels
  std::size_t samples = 0;
  bool x_in_cp_base = false;
};
/// u = E_11 (x) (E_11 - I/N), x = N E_11 (x) E_11.
NoDualityReport no_duality_discrepancy(std::size_t n, std::size_t n_samples, std::uint64_t seed);

/// (M^{1/2} (x) I) D (M^{1/2} (x) I): maps TP Choi matrices onto Tr_B D = M.
HermMat g_m(const HermMat& d, const HermMat& m, std::size_t n);

struct TniReport {
  VolumeResult tni;
  VolumeResult tp;
  VolumeResult interval;
  double log_ratio = 0.0;
  double ratio = 0.0;
  double log_ratio_se = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  bool in_bracket = false;
  bool aborted = false;
  std::string message;
  double gm_fiber_error = 0.0;
  double gm_identity_error = 0.0;
  std::size_t gm_samples = 0;
};

/// (e N^{5/2})^{-N^2} <= vol(CP^TNI) / (vol(CP^TP) vol{0 <= M <= I}) <= N^{-N^2/2}.
/// Estimates the three volumes and checks g_M on random channels.
TniReport tni_experiment(std::size_t n, const VolumeSchedule& schedule, std::size_t gm_samples);
/// Only the g_M checks.
void tni_gm_checks(TniReport& report, std::size_t n, std::size_t gm_samples, std::uint64_t seed);

}  // namespace qcones
