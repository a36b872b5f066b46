#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qcones/choi.hpp"
#include "qcones/decompose.hpp"
#include "qcones/seesaw.hpp"
#include "qcones/separable.hpp"

namespace qcones {

/// Cones of maps, by Choi matrix:
///   P   block positive
///   D   decomposable, A + B^{T_B} with A, B PSD
///   CP  PSD
///   CcP PSD partial transpose
///   T   PPT, CP intersected with CcP
///   SP  separable
/// Inclusions: SP < T < CP < D < P and T < CcP < D.
enum class ConeId { P, D, CP, CcP, T, SP };

/// Base: Tr D = N. TP: Tr_B D = I. TNI: Tr_B D <= I (CP only).
/// Sym: conv(-C^b u C^b) about the zero map. SymPolar: {y : e +- y in C*},
/// e = I/N, the polar of Sym.
enum class Slice { Cone, Base, TP, TNI, Sym, SymPolar };

enum class Status { In, Out, Unknown };

std::string to_string(ConeId c);
std::string to_string(Slice s);
std::string to_string(Status s);
std::optional<ConeId> parse_cone(const std::string& s);
std::optional<Slice> parse_slice(const std::string& s);

inline constexpr ConeId kAllCones[] = {ConeId::P, ConeId::D, ConeId::CP,
                                       ConeId::CcP, ConeId::T, ConeId::SP};

/// Dual cone under the HS pairing: CP* = CP, CcP* = CcP, T* = D, P* = SP.
ConeId dual_cone(ConeId c);
/// True when `inner` is a subset of `outer` in the inclusion table.
bool cone_subset(ConeId inner, ConeId outer);

class UnsupportedSlice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleParams {
  /// PSD tests accept lambda_min >= -psd_rel_tol * ||D||_HS.
  double psd_rel_tol = 1e-9;
  /// Affine slice constraints (trace, partial trace) tolerance.
  double slice_tol = 1e-9;
  SeesawParams seesaw{};
  /// A product value below -seesaw_out_tol is a block-positivity violation.
  double seesaw_out_tol = 1e-8;
  SplitParams split{};
  bool dual_witness = true;
  int dual_witness_iter = 2000;
  std::size_t sep_pool_size = 50000;
  std::uint64_t sep_pool_seed = 0x5e9a7ab1eULL;
  /// Separable fit accepted when residual <= sep_tol * ||D||_HS.
  double sep_tol = 1e-6;
};

struct BodySpec {
  ConeId cone = ConeId::CP;
  std::size_t n = 2;
  Slice slice = Slice::Base;
  OracleParams params{};

  /// Dimension of the affine hull.
  std::size_t ambient_dim() const;
  std::string name() const;
};

/// Throws UnsupportedSlice for combinations without an oracle.
void validate(const BodySpec& body);

// Certificates -------------------------------------------------------------

/// <v|X|v> = value < 0 with X = D, or X = D^{T_B} when partial_transpose.
struct EigenCertificate {
  std::vector<cplx> vector;
  double value = 0.0;
  bool partial_transpose = false;
};
/// <xi (x) eta|D|xi (x) eta> = value. As a map statement the input vector is
/// conj(xi): <eta|Phi(|conj xi><conj xi|)|eta> = value.
struct ProductCertificate {
  std::vector<cplx> xi;
  std::vector<cplx> eta;
  double value = 0.0;
};
/// D = A + B^{T_B}.
struct SplitCertificate {
  HermMat a;
  HermMat b;
  double residual = 0.0;
};
struct SeparableCertificate {
  SeparableDecomposition decomposition;
};
/// HS distance of the trace-normalized point from Phi_*, below the SP inradius.
struct BallCertificate {
  double distance = 0.0;
  double radius = 0.0;
};
/// W in T with <D, W> = value < 0, so D is not decomposable.
struct WitnessCertificate {
  HermMat w;
  double value = 0.0;
};
/// An affine slice constraint (trace, partial trace, ...) was violated.
struct SliceCertificate {
  std::string constraint;
  double violation = 0.0;
};
/// Trace norm of y (or y^{T_B}) against the bound N defining the Sym body.
struct TraceNormCertificate {
  double trace_norm = 0.0;
  double bound = 0.0;
  bool partial_transpose = false;
};

using Certificate =
    std::variant<std::monostate, EigenCertificate, ProductCertificate, SplitCertificate,
                 SeparableCertificate, BallCertificate, WitnessCertificate, SliceCertificate,
                 TraceNormCertificate>;

struct Verdict {
  Status status = Status::Unknown;
  /// Signed worst margin; >= 0 inside, < 0 at the violated constraint.
  double margin = 0.0;
  Certificate certificate{};
  /// True when an In verdict rests on a non-exhaustive search.
  bool heuristic = false;
  std::string note;
};

Verdict cone_membership(const ChoiMat& d, ConeId cone, const OracleParams& params = {});
Verdict slice_membership(const ChoiMat& d, const BodySpec& body);

/// Re-evaluates the certificate against D. Out certificates must reproduce
/// a violation of at least `tol / 2`; In certificates must reconstruct D.
bool verify_certificate(const ChoiMat& d, ConeId cone, const Verdict& v, double tol = 1e-8);

std::string verdict_to_json(const Verdict& v);

}  // namespace qcones
