#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace qcones {

/// Monte Carlo estimate. stderr comes from the spread across independent chains.
struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
};

/// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
/// Results must be written to per-index slots; ordering is not guaranteed.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Sample mean and standard error of the mean.
std::pair<double, double> mean_and_stderr(const double* v, std::size_t n);

}  // namespace qcones
