#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qcones/matrix.hpp"

namespace qcones {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix JSON: {"dim": d, "re": [[...]], "im": [[...]]}, row-major.
// Numbers are written with 17 significant digits so a round trip is exact.

std::string matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const std::string& text);

HermMat read_herm_json(const std::filesystem::path& path);
void write_matrix_json(const std::filesystem::path& path, const CMatrix& m);

/// printf("%.17g") of a double; shared by every text writer.
std::string format_double(double x);

}  // namespace qcones
