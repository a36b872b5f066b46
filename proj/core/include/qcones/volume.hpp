#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcones/bodies.hpp"
#include "qcones/estimate.hpp"

namespace qcones {

struct VolumeSchedule {
  int chains = 8;
  /// Samples kept per chain in each phase before any extension.
  std::size_t samples_per_phase = 400;
  /// 0 selects the defaults 10 m and m.
  std::size_t burn_in = 0;
  std::size_t thin = 0;
  /// Phase extended while its ratio has relative stderr above this.
  double target_rel_se = 0.10;
  /// Above this after all extensions the run aborts.
  double abort_rel_se = 0.25;
  int max_extensions = 3;
  std::uint64_t seed = 1;
};

struct PhaseRecord {
  double radius = 0.0;
  double ratio = 0.0;
  double rel_se = 0.0;
  std::size_t samples = 0;
};

struct VolumeResult {
  Estimate vrad;
  double log_volume = 0.0;
  double log_volume_se = 0.0;
  std::size_t dim = 0;
  std::vector<PhaseRecord> phases;
  std::uint64_t stuck_steps = 0;
};

/// Thrown when a phase ratio cannot be resolved; carries the phases so far.
class MixingError : public std::runtime_error {
 public:
  MixingError(const std::string& what, VolumeResult partial)
      : std::runtime_error(what), partial(std::move(partial)) {}
  VolumeResult partial;
};

/// Multiphase estimate: vol(K) = vol(B_{r_0}) / prod_i p_i with radii
/// r_i = r_0 2^{i/m} from the inradius up to the outradius, where p_i is the
/// fraction of hit-and-run samples of K n B_{r_i} that land in B_{r_{i-1}}.
VolumeResult volume_mcmc(const ConvexBody& body, const VolumeSchedule& schedule);

}  // namespace qcones
