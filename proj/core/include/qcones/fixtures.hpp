#pragma once

#include <filesystem>

#include "qcones/choi.hpp"

namespace qcones {

/// Generalized Choi map on 3 x 3 matrices with (a, b, c) = (2, 0, 1):
///   Phi(X) = diag(x11 + x33, x22 + x11, x33 + x22) - (X - diag X).
/// Positive but not decomposable.
ChoiMat choi_map_n3();

/// Reads a Choi matrix stored in matrix JSON.
ChoiMat load_choi_json(const std::filesystem::path& path);

/// Installed or source-tree location of data/choi_map_n3.json.
std::filesystem::path fixture_path(const char* name);

/// Both checks must hold before the fixture is trusted.
struct FixtureValidation {
  double seesaw_min = 0.0;   // >= -1e-8 means no block-positivity violation found
  double min_eigenvalue = 0.0;  // < 0 means not CP
  bool block_positive = false;
  bool not_cp = false;
  bool ok() const { return block_positive && not_cp; }
};
FixtureValidation validate_nondecomposable_fixture(const ChoiMat& d, int restarts = 500);

}  // namespace qcones
