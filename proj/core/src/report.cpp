#include "qcones/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "qcones/matrix_io.hpp"
#include "qcones/special.hpp"

namespace qcones {

const char* version() { return QCONES_VERSION; }

BoundCheck make_check(std::string body, std::string quantity, double value, double stderr_,
                      std::string bound_ref, double lo, double hi, double sigmas) {
  BoundCheck c;
  c.body = std::move(body);
  c.quantity = std::move(quantity);
  c.value = value;
  c.stderr_ = stderr_;
  c.bound_ref = std::move(bound_ref);
  c.lo = lo;
  c.hi = hi;
  c.sigmas = sigmas;
  const double slack = sigmas * stderr_;
  c.pass = std::isfinite(value) && value >= lo - slack && value <= hi + slack;
  return c;
}

BoundCheck pending_check(std::string body, std::string quantity, std::string bound_ref, double lo,
                         double hi) {
  BoundCheck c;
  c.body = std::move(body);
  c.quantity = std::move(quantity);
  c.bound_ref = std::move(bound_ref);
  c.lo = lo;
  c.hi = hi;
  c.pending = true;
  return c;
}

bool GeometryReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pending && !r.pass) return false;
  return true;
}

namespace {

nlohmann::json bound_json(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : ""; }

}  // namespace

std::string GeometryReport::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title;
  j["seed"] = seed;
  j["version"] = version;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["body"] = r.body;
    row["quantity"] = r.quantity;
    if (r.pending) {
      row["value"] = nullptr;
      row["stderr"] = nullptr;
    } else {
      row["value"] = bound_json(r.value);
      row["stderr"] = r.stderr_;
    }
    row["bound"] = r.bound_ref;
    row["lower"] = bound_json(r.lo);
    row["upper"] = bound_json(r.hi);
    if (r.pending)
      row["pass"] = "pending";
    else
      row["pass"] = r.pass;
    j["rows"].push_back(std::move(row));
  }
  j["warnings"] = warnings;
  j["all_pass"] = all_pass();
  if (!details_json.empty()) j["details"] = nlohmann::ordered_json::parse(details_json);
  return j.dump(2) + "\n";
}

std::string GeometryReport::to_csv() const {
  std::ostringstream os;
  os << "body,quantity,value,stderr,bound,lower,upper,pass\r\n";
  for (const auto& r : rows) {
    os << csv_field(r.body) << ',' << csv_field(r.quantity) << ','
       << (r.pending ? "" : csv_number(r.value)) << ','
       << (r.pending ? "" : csv_number(r.stderr_)) << ',' << csv_field(r.bound_ref) << ','
       << csv_number(r.lo) << ',' << csv_number(r.hi) << ','
       << (r.pending ? "pending" : r.pass ? "true" : "false") << "\r\n";
  }
  return os.str();
}

double vrad_cp_base_exact(std::size_t n) {
  return static_cast<double>(n) * vrad_states(n * n);
}

Interval base_vrad_bounds(ConeId cone, std::size_t n, double vrad_cp) {
  const double rn = std::sqrt(static_cast<double>(n));
  switch (cone) {
    case ConeId::CP:
    case ConeId::CcP: return {0.5, 1.0};
    case ConeId::P: return {0.25 * rn, 6.0 * rn};
    case ConeId::SP: return {1.0 / (6.0 * rn), 4.0 / rn};
    case ConeId::T: return {0.25 * vrad_cp, vrad_cp};
    case ConeId::D: return {vrad_cp, 8.0 * vrad_cp};
  }
  return {};
}

std::string base_vrad_bound_ref(ConeId cone) {
  switch (cone) {
    case ConeId::CP:
    case ConeId::CcP: return "cp base vrad bound";
    case ConeId::P: return "positive base vrad bound";
    case ConeId::SP: return "superpositive base vrad bound";
    case ConeId::T: return "ppt to cp vrad ratio bound";
    case ConeId::D: return "decomposable to cp vrad ratio bound";
  }
  return "";
}

std::optional<Interval> base_width_bounds(ConeId cone, std::size_t n) {
  switch (cone) {
    case ConeId::CP:
    case ConeId::CcP:
    case ConeId::T: return Interval{-INFINITY, 2.0};
    case ConeId::D: return Interval{-INFINITY, 4.0};
    case ConeId::SP: return Interval{-INFINITY, 4.0 / std::sqrt(static_cast<double>(n))};
    case ConeId::P: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace qcones
