#include "qcones/width.hpp"

#include <chrono>

#include "qcones/random.hpp"

namespace qcones {

BodySpec polar_base(const BodySpec& body) {
  BodySpec p = body;
  p.cone = dual_cone(body.cone);
  p.slice = Slice::Base;
  return p;
}

WidthResult mean_width_mc(const BodySpec& body, std::size_t n_dirs, std::uint64_t seed,
                          const SupportParams& params, std::size_t groups) {
  validate(body);
  const auto t0 = std::chrono::steady_clock::now();
  if (groups < 2) groups = 2;
  const std::size_t d = body.n * body.n;
  const bool base = body.slice == Slice::Base;
  std::vector<double> lo_mean(groups), hi_mean(groups);
  std::vector<char> interval(groups, 0), heuristic(groups, 0);
  const RngStream master(seed);

  parallel_for(groups, [&](std::size_t g) {
    RngStream rng = master.split(g);
    const std::size_t begin = g * n_dirs / groups;
    const std::size_t end = (g + 1) * n_dirs / groups;
    double slo = 0.0, shi = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const HermMat u = base ? random_traceless_direction(d, rng) : random_hermitian_direction(d, rng);
      SupportParams local = params;
      local.seesaw.seed = params.seesaw.seed ^ splitmix64(i);
      const SupportValue h = support_function(u, body, local);
      slo += h.lower;
      shi += h.upper;
      if (!h.exact) interval[g] = 1;
      if (h.heuristic) heuristic[g] = 1;
    }
    const double cnt = static_cast<double>(std::max<std::size_t>(1, end - begin));
    lo_mean[g] = slo / cnt;
    hi_mean[g] = shi / cnt;
  });

  WidthResult out;
  out.n_dirs = n_dirs;
  const auto [ml, sl] = mean_and_stderr(lo_mean.data(), groups);
  const auto [mh, sh] = mean_and_stderr(hi_mean.data(), groups);
  out.lower = {ml, sl, n_dirs, seed, 0.0};
  out.upper = {mh, sh, n_dirs, seed, 0.0};
  for (std::size_t g = 0; g < groups; ++g) {
    out.interval = out.interval || interval[g];
    out.heuristic = out.heuristic || heuristic[g];
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.lower.wall_time = out.upper.wall_time = wall;
  return out;
}

WidthResult mean_width_mc(std::size_t dim,
                          const std::function<double(std::span<const double>)>& support,
                          std::size_t n_dirs, std::uint64_t seed, std::size_t groups) {
  const auto t0 = std::chrono::steady_clock::now();
  if (groups < 2) groups = 2;
  std::vector<double> means(groups);
  const RngStream master(seed);
  parallel_for(groups, [&](std::size_t g) {
    RngStream rng = master.split(g);
    const std::size_t begin = g * n_dirs / groups;
    const std::size_t end = (g + 1) * n_dirs / groups;
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += support(random_direction(dim, rng));
    means[g] = s / static_cast<double>(std::max<std::size_t>(1, end - begin));
  });
  WidthResult out;
  out.n_dirs = n_dirs;
  const auto [m, se] = mean_and_stderr(means.data(), groups);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.lower = out.upper = {m, se, n_dirs, seed, wall};
  return out;
}

UrysohnBracket urysohn_bracket(const WidthResult& body, const WidthResult& polar) {
  return {1.0 / polar.upper.value, body.upper.value};
}

}  // namespace qcones
