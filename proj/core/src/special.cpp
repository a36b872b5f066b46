#include "qcones/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcones {

double log_ball_vol(std::size_t m) {
  const double h = 0.5 * static_cast<double>(m);
  return h * std::log(std::numbers::pi) - std::lgamma(h + 1.0);
}

double ball_vol(std::size_t m) { return std::exp(log_ball_vol(m)); }

double vrad_from_log_vol(double log_vol, std::size_t m) {
  return std::exp((log_vol - log_ball_vol(m)) / static_cast<double>(m));
}

double vrad_from_vol(double vol, std::size_t m) {
  if (!(vol > 0.0)) throw std::domain_error("vrad_from_vol: volume must be positive");
  return vrad_from_log_vol(std::log(vol), m);
}

double log_vol_states(std::size_t d) {
  if (d < 2) throw std::domain_error("log_vol_states: d must be at least 2");
  const double dd = static_cast<double>(d);
  double s = 0.5 * std::log(dd) + 0.5 * dd * (dd - 1.0) * std::log(2.0 * std::numbers::pi);
  for (std::size_t k = 1; k <= d; ++k) s += std::lgamma(static_cast<double>(k));
  return s - std::lgamma(dd * dd);
}

double exact_vol_states(std::size_t d) { return std::exp(log_vol_states(d)); }

double vrad_states(std::size_t d) { return vrad_from_log_vol(log_vol_states(d), d * d - 1); }

double log_binomial(std::size_t m, std::size_t k) {
  if (k > m) throw std::domain_error("log_binomial: k > m");
  return std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
}

double bmk(std::size_t m, std::size_t k) {
  if (k == 0 || k >= m) throw std::domain_error("bmk: need 0 < k < m");
  const double lm = std::lgamma(k / 2.0 + 1.0) + std::lgamma((m - k) / 2.0 + 1.0) -
                    std::lgamma(m / 2.0 + 1.0);
  return std::exp(lm / static_cast<double>(m));
}

SectionBounds section_bounds(double vrad_k, double r, double big_r, std::size_t m,
                             std::size_t k) {
  if (!(r > 0.0) || !(r <= big_r)) throw std::domain_error("section_bounds: need 0 < r <= R");
  if (k == 0 || k >= m) throw std::domain_error("section_bounds: need 0 < k < m");
  const double mm = static_cast<double>(m);
  const double kk = static_cast<double>(k);
  const double e = (mm - kk) / mm;
  const double lb = std::log(bmk(m, k));
  const double lv = std::log(vrad_k);
  SectionBounds out;
  out.lo = std::exp((mm / kk) * (lv - e * std::log(big_r) + lb));
  out.hi = std::exp((mm / kk) * (lv - e * std::log(r) + lb + log_binomial(m, k) / mm));
  return out;
}

}  // namespace qcones
