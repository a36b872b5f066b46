#include "qcones/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qcones {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_json(const CMatrix& m) {
  if (!m.square()) throw DimensionError("matrix_to_json: matrix is not square");
  const std::size_t d = m.rows();
  std::string re = "[", im = "[";
  for (std::size_t i = 0; i < d; ++i) {
    re += i ? ",[" : "[";
    im += i ? ",[" : "[";
    for (std::size_t j = 0; j < d; ++j) {
      if (j) {
        re += ',';
        im += ',';
      }
      re += format_double(m(i, j).real());
      im += format_double(m(i, j).imag());
    }
    re += ']';
    im += ']';
  }
  re += ']';
  im += ']';
  return "{\"dim\":" + std::to_string(d) + ",\"re\":" + re + ",\"im\":" + im + "}";
}

CMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
    throw FormatError("matrix JSON: expected keys \"dim\" and \"re\"");
  }
  const auto d = j.at("dim").get<std::size_t>();
  const auto& re = j.at("re");
  const bool has_im = j.contains("im");
  const auto& im = has_im ? j.at("im") : re;
  if (re.size() != d || im.size() != d) throw FormatError("matrix JSON: row count != dim");
  CMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    if (re[r].size() != d || im[r].size() != d) throw FormatError("matrix JSON: ragged row");
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = cplx(re[r][c].get<double>(), has_im ? im[r][c].get<double>() : 0.0);
    }
  }
  return m;
}

HermMat read_herm_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return HermMat(matrix_from_json(ss.str()));
}

void write_matrix_json(const std::filesystem::path& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << matrix_to_json(m) << '\n';
}

}  // namespace qcones
