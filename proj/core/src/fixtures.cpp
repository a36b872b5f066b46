#include "qcones/fixtures.hpp"

#include <cstdlib>

#include "qcones/eigen.hpp"
#include "qcones/matrix_io.hpp"
#include "qcones/seesaw.hpp"

#ifndef QCONES_DATA_DIR
#define QCONES_DATA_DIR ""
#endif

namespace qcones {

ChoiMat choi_map_n3() {
  constexpr std::size_t n = 3;
  // Diagonal images Phi(E_mm); off-diagonal units map to -E_{m mu}.
  const double diag[3][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CMatrix d(n * n, n * n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t mu = 0; mu < n; ++mu) {
      if (m == mu) {
        for (std::size_t k = 0; k < n; ++k) d(m * n + k, m * n + k) = diag[m][k];
      } else {
        d(m * n + m, mu * n + mu) = -1.0;
      }
    }
  return {n, HermMat(std::move(d))};
}

ChoiMat load_choi_json(const std::filesystem::path& path) {
  HermMat h = read_herm_json(path);
  return {subsystem_dim(h.dim()), std::move(h)};
}

std::filesystem::path fixture_path(const char* name) {
  if (const char* env = std::getenv("QCONES_DATA_DIR"); env && *env)
    return std::filesystem::path(env) / name;
  return std::filesystem::path(QCONES_DATA_DIR) / name;
}

FixtureValidation validate_nondecomposable_fixture(const ChoiMat& d, int restarts) {
  FixtureValidation v;
  SeesawParams p;
  p.restarts = restarts;
  p.seed = 0xc40ce5ULL;
  v.seesaw_min = seesaw_min(d.mat(), d.n(), p).value;
  v.min_eigenvalue = min_eigenvalue(d.mat());
  v.block_positive = v.seesaw_min >= -1e-8;
  v.not_cp = v.min_eigenvalue < -1e-9;
  return v;
}

}  // namespace qcones
