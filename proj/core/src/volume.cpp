#include "qcones/volume.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "qcones/special.hpp"
#include "qcones/walk.hpp"

namespace qcones {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex mu;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::pair<double, double> mean_and_stderr(const double* v, std::size_t n) {
  if (n == 0) return {0.0, 0.0};
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += v[i];
  mean /= static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) ss += (v[i] - mean) * (v[i] - mean);
  return {mean, std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n))};
}

namespace {

struct Chain {
  RngStream rng;
  WalkState state;
  std::size_t inside = 0;
  std::size_t total = 0;
  double log_ratio_sum = 0.0;
};

void run_chain(const ConvexBody& body, Chain& c, double radius, double inner, std::size_t burn,
               std::size_t thin, std::size_t samples) {
  for (std::size_t s = 0; s < burn; ++s) hit_and_run_step(body, c.state, c.rng, radius);
  const double inner_sq = inner * inner;
  for (std::size_t k = 0; k < samples; ++k) {
    for (std::size_t s = 0; s < thin; ++s) hit_and_run_step(body, c.state, c.rng, radius);
    if (norm_sq(c.state.x) <= inner_sq) ++c.inside;
    ++c.total;
  }
}

}  // namespace

VolumeResult volume_mcmc(const ConvexBody& body, const VolumeSchedule& schedule) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = body.dim();
  const double r0 = body.inradius();
  const double big_r = body.outradius();
  if (!(r0 > 0.0) || !std::isfinite(big_r) || big_r < r0)
    throw std::invalid_argument("volume_mcmc: body needs finite radii with 0 < r <= R");
  if (schedule.chains < 2) throw std::invalid_argument("volume_mcmc: need at least 2 chains");
  const std::size_t burn = schedule.burn_in ? schedule.burn_in : 10 * m;
  const std::size_t thin = schedule.thin ? schedule.thin : m;
  const double mm = static_cast<double>(m);
  const std::size_t phases =
      big_r > r0 ? static_cast<std::size_t>(std::ceil(mm * std::log2(big_r / r0))) : 0;

  const RngStream master(schedule.seed);
  std::vector<Chain> chains;
  for (int c = 0; c < schedule.chains; ++c)
    chains.push_back({master.split(static_cast<std::uint64_t>(c)), walk_start(body)});

  VolumeResult result;
  result.dim = m;
  double pooled_log = 0.0;
  std::size_t n_samples = 0;
  const std::size_t nc = chains.size();

  for (std::size_t i = 1; i <= phases; ++i) {
    const double inner = r0 * std::exp2((static_cast<double>(i) - 1.0) / mm);
    const double radius = i == phases ? big_r : r0 * std::exp2(static_cast<double>(i) / mm);
    for (auto& c : chains) c.inside = c.total = 0;
    std::size_t batch = schedule.samples_per_phase;
    double rel_se = INFINITY;
    for (int ext = 0;; ++ext) {
      parallel_for(nc, [&](std::size_t c) {
        run_chain(body, chains[c], radius, inner, ext == 0 ? burn : 0, thin, batch);
      });
      std::vector<double> ratios(nc);
      std::size_t in_all = 0, tot_all = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        ratios[c] = static_cast<double>(chains[c].inside) / static_cast<double>(chains[c].total);
        in_all += chains[c].inside;
        tot_all += chains[c].total;
      }
      const auto [mean, se] = mean_and_stderr(ratios.data(), nc);
      // Binomial floor keeps the estimate honest when chains happen to agree.
      const double p = static_cast<double>(in_all) / static_cast<double>(tot_all);
      const double binom = std::sqrt(p * (1.0 - p) / static_cast<double>(tot_all));
      rel_se = mean > 0.0 ? std::max(se, binom) / mean : INFINITY;
      if (rel_se <= schedule.target_rel_se || ext >= schedule.max_extensions) break;
      batch *= 2;
    }
    std::size_t in_all = 0, tot_all = 0;
    for (const auto& c : chains) {
      in_all += c.inside;
      tot_all += c.total;
    }
    n_samples += tot_all;
    const double p = static_cast<double>(in_all) / static_cast<double>(tot_all);
    result.phases.push_back({radius, p, rel_se, tot_all});
    if (!(rel_se <= schedule.abort_rel_se) || in_all == 0) {
      result.log_volume = NAN;
      throw MixingError("phase " + std::to_string(i) + " ratio relative stderr " +
                            std::to_string(rel_se) + " exceeds abort threshold",
                        result);
    }
    pooled_log -= std::log(p);
    for (auto& c : chains) {
      const double pc = c.inside > 0 ? static_cast<double>(c.inside) / static_cast<double>(c.total)
                                     : 0.5 / static_cast<double>(c.total);
      c.log_ratio_sum -= std::log(pc);
    }
  }

  const double log_b0 = log_ball_vol(m) + mm * std::log(r0);
  std::vector<double> per_chain(nc);
  for (std::size_t c = 0; c < nc; ++c) per_chain[c] = log_b0 + chains[c].log_ratio_sum;
  const auto [mean_log, se_log] = mean_and_stderr(per_chain.data(), nc);
  (void)mean_log;
  result.log_volume = log_b0 + pooled_log;
  result.log_volume_se = se_log;
  result.vrad.value = vrad_from_log_vol(result.log_volume, m);
  result.vrad.stderr_ = result.vrad.value * se_log / mm;
  result.vrad.n_samples = n_samples;
  result.vrad.seed = schedule.seed;
  for (const auto& c : chains) result.stuck_steps += c.state.stuck;
  result.vrad.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace qcones
