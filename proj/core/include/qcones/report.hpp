#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcones/cones.hpp"

namespace qcones {

/// Library version string.
const char* version();

/// One recorded quantity with the bound it is checked against. A pending row
/// has no value yet; bounds missing on one side are +-inf.
struct BoundCheck {
  std::string body;
  std::string quantity;
  double value = 0.0;
  double stderr_ = 0.0;
  /// Descriptive name of the bound, e.g. "cp base vrad bound".
  std::string bound_ref;
  double lo = -INFINITY;
  double hi = INFINITY;
  /// Allowed slack in units of stderr.
  double sigmas = 3.0;
  bool pending = false;
  bool pass = false;
};

/// Evaluates pass from value, stderr and the interval.
BoundCheck make_check(std::string body, std::string quantity, double value, double stderr_,
                      std::string bound_ref, double lo, double hi, double sigmas = 3.0);
BoundCheck pending_check(std::string body, std::string quantity, std::string bound_ref, double lo,
                         double hi);

struct GeometryReport {
  std::string title;
  std::uint64_t seed = 0;
  std::string version = qcones::version();
  std::vector<BoundCheck> rows;
  std::vector<std::string> warnings;
  /// Extra JSON object text merged under "details".
  std::string details_json;

  bool all_pass() const;
  std::string to_json() const;
  /// RFC 4180, CRLF line ends, header always present.
  std::string to_csv() const;
};

/// Bounds on vrad of a base at dimension N. T and D are bounded relative to
/// vrad(CP^b), which is passed in.
struct Interval {
  double lo = -INFINITY;
  double hi = INFINITY;
};
Interval base_vrad_bounds(ConeId cone, std::size_t n, double vrad_cp);
std::string base_vrad_bound_ref(ConeId cone);
/// Upper bounds on mean width of a base; lo is -inf.
std::optional<Interval> base_width_bounds(ConeId cone, std::size_t n);
/// Exact vrad(CP_N^b) = N vrad(M_{N^2}^tot).
double vrad_cp_base_exact(std::size_t n);

}  // namespace qcones
