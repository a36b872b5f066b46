#include "qcones/bodies.hpp"

#include <cmath>

#include "qcones/eigen.hpp"

namespace qcones {

bool BallBody::contains(std::span<const double> x) const {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s <= r_ * r_;
}

bool CubeBody::contains(std::span<const double> x) const {
  for (double v : x)
    if (std::abs(v) > h_) return false;
  return true;
}

double CubeBody::outradius() const { return h_ * std::sqrt(static_cast<double>(m_)); }

bool CrossPolytopeBody::contains(std::span<const double> x) const {
  double s = 0.0;
  for (double v : x) s += std::abs(v);
  return s <= h_;
}

double CrossPolytopeBody::inradius() const { return h_ / std::sqrt(static_cast<double>(m_)); }

HermMat SparseHerm::dense() const {
  CMatrix m(d, d);
  for (const auto& [idx, v] : entries) m.data()[idx] += v;
  return HermMat::symmetrize(m);
}

namespace {

void push_offdiagonal(std::vector<SparseHerm>& out, std::size_t d) {
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      out.push_back({d, {{j * d + k, M_SQRT1_2}, {k * d + j, M_SQRT1_2}}});
      out.push_back({d, {{j * d + k, cplx(0.0, -M_SQRT1_2)}, {k * d + j, cplx(0.0, M_SQRT1_2)}}});
    }
}

}  // namespace

std::vector<SparseHerm> hermitian_basis(std::size_t d) {
  std::vector<SparseHerm> out;
  for (std::size_t j = 0; j < d; ++j) out.push_back({d, {{j * d + j, 1.0}}});
  push_offdiagonal(out, d);
  return out;
}

std::vector<SparseHerm> traceless_basis(std::size_t d) {
  std::vector<SparseHerm> out;
  // Generalized Gell-Mann diagonals (E_11 + ... + E_kk - k E_{k+1,k+1}) / sqrt(k(k+1)).
  for (std::size_t k = 1; k < d; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    SparseHerm h{d, {}};
    for (std::size_t j = 0; j < k; ++j) h.entries.push_back({j * d + j, s});
    h.entries.push_back({k * d + k, -static_cast<double>(k) * s});
    out.push_back(std::move(h));
  }
  push_offdiagonal(out, d);
  return out;
}

std::vector<SparseHerm> tp_tangent_basis(std::size_t n) {
  const auto ga = hermitian_basis(n);
  const auto hb = traceless_basis(n);
  const std::size_t d = n * n;
  std::vector<SparseHerm> out;
  for (const auto& g : ga)
    for (const auto& h : hb) {
      SparseHerm p{d, {}};
      for (const auto& [ig, vg] : g.entries)
        for (const auto& [ih, vh] : h.entries) {
          const std::size_t gr = ig / n, gc = ig % n, hr = ih / n, hc = ih % n;
          p.entries.push_back({(gr * n + hr) * d + (gc * n + hc), vg * vh});
        }
      out.push_back(std::move(p));
    }
  return out;
}

namespace {

bool chol_psd(const HermMat& h, double tol) {
  thread_local std::vector<cplx> work;
  work.resize(h.dim() * h.dim());
  return is_psd_raw(h.matrix().data(), h.dim(), tol, work);
}

}  // namespace

bool fast_cone_member(const HermMat& d, std::size_t n, ConeId cone, const OracleParams& params,
                      const WalkOracle& walk) {
  const double tol = walk.psd_rel_tol * d.hs_norm();
  switch (cone) {
    case ConeId::CP: return chol_psd(d, tol);
    case ConeId::CcP: return chol_psd(partial_transpose(d, n), tol);
    case ConeId::T: return chol_psd(d, tol) && chol_psd(partial_transpose(d, n), tol);
    case ConeId::SP:
      if (n == 2) return chol_psd(d, tol) && chol_psd(partial_transpose(d, n), tol);
      break;
    case ConeId::P:
    case ConeId::D:
      if (cone == ConeId::D && n != 2) break;
      if (chol_psd(d, tol) || chol_psd(partial_transpose(d, n), tol)) return true;
      if (n == 2) return block_positive_qubit(d, tol);
      {
        SeesawParams sp = params.seesaw;
        sp.restarts = walk.seesaw_restarts;
        return seesaw_min(d, n, sp).value >= -params.seesaw_out_tol;
      }
  }
  return cone_membership(ChoiMat(n, d), cone, params).status == Status::In;
}

SliceGeometry slice_geometry(const BodySpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  const double nn = static_cast<double>(n);
  const double d = nn * nn;
  SliceGeometry g;
  switch (spec.slice) {
    case Slice::Base:
    case Slice::TP:
      g.center = depolarizing_choi(n).mat();
      g.inradius = 1.0 / std::sqrt(d - 1.0);
      g.outradius = std::sqrt(d - 1.0);
      break;
    case Slice::TNI: {
      const double s = 1.0 / (nn + std::sqrt(nn));
      g.center = HermMat::identity(n * n) * s;
      g.inradius = std::min(s, (1.0 - s * nn) / std::sqrt(nn));
      g.outradius = std::sqrt(std::max(0.0, nn * nn - 2.0 * s * nn) + s * s * nn * nn);
      break;
    }
    case Slice::Sym:
      g.center = HermMat::zeros(n * n);
      g.inradius = 1.0;
      g.outradius = nn;
      break;
    case Slice::SymPolar:
      if (spec.cone != ConeId::CP && spec.cone != ConeId::CcP)
        throw UnsupportedSlice("SymPolar bodies are supported for CP and CcP only");
      g.center = HermMat::zeros(n * n);
      g.inradius = 1.0 / nn;
      g.outradius = 1.0;
      break;
    case Slice::Cone:
      throw UnsupportedSlice("a cone is unbounded; choose a slice");
  }
  return g;
}

MatrixBody::MatrixBody(const BodySpec& spec, WalkOracle walk)
    : kind_(Kind::Cone), spec_(spec), has_spec_(true), walk_(walk), d_(spec.n * spec.n) {
  const SliceGeometry g = slice_geometry(spec);
  center_ = g.center;
  r_ = g.inradius;
  big_r_ = g.outradius;
  switch (spec.slice) {
    case Slice::Base: basis_ = traceless_basis(d_); break;
    case Slice::TP: basis_ = tp_tangent_basis(spec.n); break;
    default: basis_ = hermitian_basis(d_); break;
  }
  name_ = spec.name();
}

MatrixBody MatrixBody::states(std::size_t d) {
  MatrixBody b;
  b.kind_ = Kind::States;
  b.d_ = d;
  const double dd = static_cast<double>(d);
  b.center_ = HermMat::identity(d) * (1.0 / dd);
  b.basis_ = traceless_basis(d);
  b.r_ = 1.0 / std::sqrt(dd * (dd - 1.0));
  b.big_r_ = std::sqrt((dd - 1.0) / dd);
  b.name_ = "M_" + std::to_string(d) + "^tot";
  return b;
}

MatrixBody MatrixBody::operator_interval(std::size_t n) {
  MatrixBody b;
  b.kind_ = Kind::Interval;
  b.d_ = n;
  b.center_ = HermMat::identity(n) * 0.5;
  b.basis_ = hermitian_basis(n);
  b.r_ = 0.5;
  b.big_r_ = 0.5 * std::sqrt(static_cast<double>(n));
  b.name_ = "A_" + std::to_string(n);
  return b;
}

HermMat MatrixBody::to_matrix(std::span<const double> x) const {
  require_same_dim(x.size(), basis_.size(), "MatrixBody::to_matrix");
  CMatrix m = center_.matrix();
  auto data = m.data();
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (x[k] == 0.0) continue;
    for (const auto& [idx, v] : basis_[k].entries) data[idx] += x[k] * v;
  }
  return HermMat::symmetrize(m);
}

std::vector<double> MatrixBody::to_coords(const HermMat& h) const {
  require_same_dim(h.dim(), d_, "MatrixBody::to_coords");
  const CMatrix diff = h.matrix() - center_.matrix();
  std::vector<double> x(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    double s = 0.0;
    for (const auto& [idx, v] : basis_[k].entries) {
      const cplx z = diff.data()[idx];
      s += z.real() * v.real() + z.imag() * v.imag();
    }
    x[k] = s;
  }
  return x;
}

bool MatrixBody::contains(std::span<const double> x) const { return test(to_matrix(x)); }

bool MatrixBody::contains_matrix(const HermMat& h) const { return test(h); }

bool MatrixBody::test(const HermMat& h) const {
  const double tol = walk_.psd_rel_tol * h.hs_norm();
  switch (kind_) {
    case Kind::States: return chol_psd(h, tol);
    case Kind::Interval:
      return chol_psd(h, tol) && chol_psd(HermMat::identity(d_) - h, walk_.psd_rel_tol);
    case Kind::Cone: break;
  }
  const std::size_t n = spec_.n;
  const double nn = static_cast<double>(n);
  switch (spec_.slice) {
    case Slice::Base:
    case Slice::TP:
      return fast_cone_member(h, n, spec_.cone, spec_.params, walk_);
    case Slice::TNI:
      return chol_psd(h, tol) &&
             chol_psd(HermMat::identity(n) - partial_trace(h, n, Subsystem::B),
                      walk_.psd_rel_tol);
    case Slice::Sym: {
      const HermMat x = spec_.cone == ConeId::CcP ? partial_transpose(h, n) : h;
      return trace_norm(x) <= nn * (1.0 + spec_.params.slice_tol);
    }
    case Slice::SymPolar: {
      const HermMat e = HermMat::identity(n * n) * (1.0 / nn);
      const HermMat x = spec_.cone == ConeId::CcP ? partial_transpose(h, n) : h;
      return chol_psd(e - x, walk_.psd_rel_tol / nn) && chol_psd(e + x, walk_.psd_rel_tol / nn);
    }
    case Slice::Cone: break;
  }
  return false;
}

}  // namespace qcones
