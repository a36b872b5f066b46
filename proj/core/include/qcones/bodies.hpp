#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcones/cones.hpp"

namespace qcones {

/// Convex body in R^m, described in coordinates relative to an interior
/// center. contains() must be safe to call concurrently.
class ConvexBody {
 public:
  virtual ~ConvexBody() = default;
  virtual std::size_t dim() const = 0;
  virtual bool contains(std::span<const double> x) const = 0;
  /// Radius of a centered ball inside the body.
  virtual double inradius() const = 0;
  /// Radius of a centered ball containing the body.
  virtual double outradius() const = 0;
  virtual std::string name() const = 0;
};

class BallBody final : public ConvexBody {
 public:
  BallBody(std::size_t m, double radius) : m_(m), r_(radius) {}
  std::size_t dim() const override { return m_; }
  bool contains(std::span<const double> x) const override;
  double inradius() const override { return r_; }
  double outradius() const override { return r_; }
  std::string name() const override { return "ball"; }

 private:
  std::size_t m_;
  double r_;
};

/// [-h, h]^m.
class CubeBody final : public ConvexBody {
 public:
  CubeBody(std::size_t m, double half) : m_(m), h_(half) {}
  std::size_t dim() const override { return m_; }
  bool contains(std::span<const double> x) const override;
  double inradius() const override { return h_; }
  double outradius() const override;
  std::string name() const override { return "cube"; }

 private:
  std::size_t m_;
  double h_;
};

/// {x : sum |x_i| <= h}.
class CrossPolytopeBody final : public ConvexBody {
 public:
  CrossPolytopeBody(std::size_t m, double h) : m_(m), h_(h) {}
  std::size_t dim() const override { return m_; }
  bool contains(std::span<const double> x) const override;
  double inradius() const override;
  double outradius() const override { return h_; }
  std::string name() const override { return "cross-polytope"; }

 private:
  std::size_t m_;
  double h_;
};

/// Sparse Hermitian matrix: (row * d + col, value) entries.
struct SparseHerm {
  std::size_t d = 0;
  std::vector<std::pair<std::size_t, cplx>> entries;
  HermMat dense() const;
};

/// Orthonormal (HS) basis of all d x d Hermitian matrices.
std::vector<SparseHerm> hermitian_basis(std::size_t d);
/// Orthonormal basis of traceless d x d Hermitian matrices.
std::vector<SparseHerm> traceless_basis(std::size_t d);
/// Orthonormal basis of {X on C^N (x) C^N : Tr_B X = 0}, products G (x) H.
std::vector<SparseHerm> tp_tangent_basis(std::size_t n);

/// Settings for the boolean membership test used inside walks.
struct WalkOracle {
  double psd_rel_tol = 1e-9;
  int seesaw_restarts = 8;
};

/// Fast boolean cone test: Cholesky for the PSD cones, the exact qubit test
/// for P and D at N = 2, a reduced see-saw for P otherwise,
/// the full oracle elsewhere with Unknown counted as Out.
bool fast_cone_member(const HermMat& d, std::size_t n, ConeId cone, const OracleParams& params,
                      const WalkOracle& walk = {});

/// A slice of a cone, or another matrix body, parametrized by coordinates in
/// an orthonormal basis of its tangent space around `center`.
class MatrixBody final : public ConvexBody {
 public:
  explicit MatrixBody(const BodySpec& spec, WalkOracle walk = {});
  /// Density matrices of size d (trace one, PSD), centered at I/d.
  static MatrixBody states(std::size_t d);
  /// {0 <= M <= I} on C^n, centered at I/2.
  static MatrixBody operator_interval(std::size_t n);

  std::size_t dim() const override { return basis_.size(); }
  bool contains(std::span<const double> x) const override;
  double inradius() const override { return r_; }
  double outradius() const override { return big_r_; }
  std::string name() const override { return name_; }

  const HermMat& center() const noexcept { return center_; }
  const std::vector<SparseHerm>& basis() const noexcept { return basis_; }
  const BodySpec* spec() const noexcept { return has_spec_ ? &spec_ : nullptr; }
  HermMat to_matrix(std::span<const double> x) const;
  /// Orthogonal projection of (H - center) onto the tangent basis.
  std::vector<double> to_coords(const HermMat& h) const;
  /// Membership of a full matrix with the same fast test.
  bool contains_matrix(const HermMat& h) const;

 private:
  enum class Kind { Cone, States, Interval };
  MatrixBody() = default;
  bool test(const HermMat& h) const;

  Kind kind_ = Kind::Cone;
  BodySpec spec_{};
  bool has_spec_ = false;
  WalkOracle walk_{};
  std::size_t d_ = 0;
  HermMat center_;
  std::vector<SparseHerm> basis_;
  double r_ = 0.0;
  double big_r_ = 0.0;
  std::string name_;
};

/// Center, inradius and outradius of the slice bodies.
struct SliceGeometry {
  HermMat center;
  double inradius = 0.0;
  double outradius = 0.0;
};
SliceGeometry slice_geometry(const BodySpec& spec);

}  // namespace qcones
