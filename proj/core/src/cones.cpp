#include "qcones/cones.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "qcones/eigen.hpp"
#include "qcones/matrix_io.hpp"

namespace qcones {

std::string to_string(ConeId c) {
  switch (c) {
    case ConeId::P: return "P";
    case ConeId::D: return "D";
    case ConeId::CP: return "CP";
    case ConeId::CcP: return "CcP";
    case ConeId::T: return "T";
    case ConeId::SP: return "SP";
  }
  return "?";
}

std::string to_string(Slice s) {
  switch (s) {
    case Slice::Cone: return "cone";
    case Slice::Base: return "base";
    case Slice::TP: return "tp";
    case Slice::TNI: return "tni";
    case Slice::Sym: return "sym";
    case Slice::SymPolar: return "sympolar";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::In: return "In";
    case Status::Out: return "Out";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::optional<ConeId> parse_cone(const std::string& s) {
  for (ConeId c : kAllCones) {
    std::string name = to_string(c);
    if (s == name) return c;
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);
    if (s == name) return c;
  }
  return std::nullopt;
}

std::optional<Slice> parse_slice(const std::string& s) {
  for (Slice x : {Slice::Cone, Slice::Base, Slice::TP, Slice::TNI, Slice::Sym, Slice::SymPolar})
    if (s == to_string(x)) return x;
  return std::nullopt;
}

ConeId dual_cone(ConeId c) {
  switch (c) {
    case ConeId::CP: return ConeId::CP;
    case ConeId::CcP: return ConeId::CcP;
    case ConeId::T: return ConeId::D;
    case ConeId::D: return ConeId::T;
    case ConeId::P: return ConeId::SP;
    case ConeId::SP: return ConeId::P;
  }
  return c;
}

bool cone_subset(ConeId inner, ConeId outer) {
  auto rank = [](ConeId c) {
    switch (c) {
      case ConeId::SP: return 0;
      case ConeId::T: return 1;
      case ConeId::CP:
      case ConeId::CcP: return 2;
      case ConeId::D: return 3;
      case ConeId::P: return 4;
    }
    return -1;
  };
  if (inner == outer) return true;
  if ((inner == ConeId::CP && outer == ConeId::CcP) || (inner == ConeId::CcP && outer == ConeId::CP))
    return false;
  return rank(inner) < rank(outer);
}

std::size_t BodySpec::ambient_dim() const {
  const std::size_t n2 = n * n;
  switch (slice) {
    case Slice::Base: return n2 * n2 - 1;
    case Slice::TP: return n2 * n2 - n2;
    default: return n2 * n2;
  }
}

std::string BodySpec::name() const {
  return to_string(cone) + "_" + std::to_string(n) + "^" + to_string(slice);
}

void validate(const BodySpec& body) {
  if (body.n < 2) throw UnsupportedSlice("N must be at least 2");
  if (body.slice == Slice::TNI && body.cone != ConeId::CP)
    throw UnsupportedSlice("TNI slice is defined for CP only");
  if (body.slice == Slice::Sym && body.cone != ConeId::CP && body.cone != ConeId::CcP)
    throw UnsupportedSlice("Sym slice is supported for CP and CcP only");
}

namespace {

Verdict psd_verdict(const HermMat& x, double tol, bool partial_transpose) {
  const auto [lmin, v] = bottom_eigenpair(x);
  Verdict out;
  out.margin = lmin;
  if (lmin >= -tol) {
    out.status = Status::In;
  } else {
    out.status = Status::Out;
    out.certificate = EigenCertificate{v, lmin, partial_transpose};
  }
  return out;
}

Verdict cp_verdict(const ChoiMat& d, const OracleParams& p) {
  return psd_verdict(d.mat(), p.psd_rel_tol * d.mat().hs_norm(), false);
}

Verdict ccp_verdict(const ChoiMat& d, const OracleParams& p) {
  return psd_verdict(partial_transpose(d.mat(), d.n()), p.psd_rel_tol * d.mat().hs_norm(), true);
}

Verdict t_verdict(const ChoiMat& d, const OracleParams& p) {
  Verdict a = cp_verdict(d, p);
  if (a.status == Status::Out) return a;
  Verdict b = ccp_verdict(d, p);
  if (b.status == Status::Out) return b;
  a.margin = std::min(a.margin, b.margin);
  return a;
}

Verdict seesaw_verdict(const ChoiMat& d, const OracleParams& p) {
  const ProductMin best = seesaw_min(d.mat(), d.n(), p.seesaw);
  Verdict out;
  out.margin = best.value;
  if (best.value < -p.seesaw_out_tol) {
    out.status = Status::Out;
    out.certificate = ProductCertificate{best.xi, best.eta, best.value};
  } else if (d.n() == 2 && block_positive_qubit(d.mat(), p.seesaw_out_tol)) {
    out.status = Status::In;
    out.note = "exact qubit block-positivity test";
  } else {
    out.status = Status::In;
    out.heuristic = true;
    out.note = "see-saw found no product violation";
  }
  return out;
}

Verdict p_verdict(const ChoiMat& d, const OracleParams& p) {
  // D is contained in P, and membership in CP or CcP settles D exactly.
  if (cp_verdict(d, p).status == Status::In || ccp_verdict(d, p).status == Status::In) {
    Verdict out;
    out.status = Status::In;
    out.margin = 0.0;
    out.note = "CP or CcP member";
    return out;
  }
  return seesaw_verdict(d, p);
}

Verdict d_verdict(const ChoiMat& d, const OracleParams& p) {
  const Verdict cp = cp_verdict(d, p);
  if (cp.status == Status::In) {
    Verdict out;
    out.status = Status::In;
    out.margin = cp.margin;
    out.certificate = SplitCertificate{d.mat(), HermMat::zeros(d.mat().dim()), 0.0};
    return out;
  }
  const Verdict ccp = ccp_verdict(d, p);
  if (ccp.status == Status::In) {
    Verdict out;
    out.status = Status::In;
    out.margin = ccp.margin;
    out.certificate = SplitCertificate{HermMat::zeros(d.mat().dim()),
                                       partial_transpose(d.mat(), d.n()), 0.0};
    return out;
  }
  // A product vector with negative value is a separable, hence T, witness.
  const Verdict pv = seesaw_verdict(d, p);
  if (pv.status == Status::Out) {
    Verdict out = pv;
    out.note = "product witness; not block positive";
    return out;
  }
  SplitResult split = decomposable_split(d, p.split);
  if (split.success) {
    Verdict out;
    out.status = Status::In;
    out.margin = -split.residual;
    out.certificate = SplitCertificate{split.a, split.b, split.residual};
    out.note = "Dykstra split after " + std::to_string(split.iterations) + " iterations";
    return out;
  }
  if (p.dual_witness) {
    const DualWitness w = decomposable_dual_witness(d, p.dual_witness_iter);
    if (w.valid && w.value < -p.seesaw_out_tol) {
      Verdict out;
      out.status = Status::Out;
      out.margin = w.value;
      out.certificate = WitnessCertificate{w.w, w.value};
      out.note = "T-dual witness from projection onto the decomposable cone";
      return out;
    }
  }
  Verdict out;
  out.status = Status::Unknown;
  out.margin = -split.residual;
  out.note = std::string(split.plateau ? "Dykstra plateau" : "Dykstra iteration cap") +
             ", residual " + format_double(split.residual);
  return out;
}

// Nearest product vector to each eigenvector with positive eigenvalue:
// the top singular pair of the eigenvector reshaped to N x N.
std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>> eigen_products(const HermMat& d,
                                                                            std::size_t n) {
  std::vector<std::pair<std::vector<cplx>, std::vector<cplx>>> out;
  const Spectrum s = eigh(d);
  const double floor = 1e-12 * std::max(1.0, s.values.front());
  for (std::size_t k = 0; k < s.values.size() && s.values[k] > floor; ++k) {
    const std::vector<cplx> v = s.vector(k);
    CMatrix r(n, n, v);
    const Spectrum left = eigh(HermMat::symmetrize(r * r.adjoint()));
    std::vector<cplx> xi = left.vector(0);
    std::vector<cplx> eta(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) eta[j] += r(i, j) * std::conj(xi[i]);
    const double en = vec_norm(eta);
    if (en <= 0.0) continue;
    for (auto& z : eta) z /= en;
    out.emplace_back(std::move(xi), std::move(eta));
  }
  return out;
}

Verdict sp_verdict(const ChoiMat& d, const OracleParams& p) {
  Verdict t = t_verdict(d, p);
  if (t.status == Status::Out) return t;
  const std::size_t n = d.n();
  if (n == 2) {
    t.note = "PPT equals separable for N = 2";
    return t;
  }
  const double tr = d.trace();
  const double hs = d.mat().hs_norm();
  if (tr <= 0.0) {
    // PSD with non-positive trace is the zero matrix.
    t.status = Status::In;
    return t;
  }
  const HermMat normalized = d.mat() * (static_cast<double>(n) / tr);
  const double dist = hs_distance(normalized, depolarizing_choi(n).mat());
  const double radius = 1.0 / std::sqrt(static_cast<double>(n * n - 1));
  if (dist <= radius * (1.0 + 1e-10)) {
    Verdict out;
    out.status = Status::In;
    out.margin = radius - dist;
    out.certificate = BallCertificate{dist, radius};
    return out;
  }
  const auto pool = product_pool(n, p.sep_pool_size, p.sep_pool_seed);
  SeparableDecomposition dec = separable_fit(d.mat(), *pool, eigen_products(d.mat(), n));
  Verdict out;
  out.margin = -dec.residual;
  if (dec.residual <= p.sep_tol * std::max(1.0, hs)) {
    out.status = Status::In;
    out.certificate = SeparableCertificate{std::move(dec)};
  } else {
    out.status = Status::Unknown;
    out.note = "no separable decomposition over the product pool, residual " +
               format_double(dec.residual);
  }
  return out;
}

Verdict slice_out(const std::string& what, double violation) {
  Verdict v;
  v.status = Status::Out;
  v.margin = -violation;
  v.certificate = SliceCertificate{what, violation};
  return v;
}

}  // namespace

Verdict cone_membership(const ChoiMat& d, ConeId cone, const OracleParams& params) {
  switch (cone) {
    case ConeId::CP: return cp_verdict(d, params);
    case ConeId::CcP: return ccp_verdict(d, params);
    case ConeId::T: return t_verdict(d, params);
    case ConeId::P: return p_verdict(d, params);
    case ConeId::D: return d_verdict(d, params);
    case ConeId::SP: return sp_verdict(d, params);
  }
  throw std::invalid_argument("cone_membership: unknown cone");
}

Verdict slice_membership(const ChoiMat& d, const BodySpec& body) {
  validate(body);
  require_same_dim(d.n(), body.n, "slice_membership");
  const std::size_t n = body.n;
  const double nn = static_cast<double>(n);
  const OracleParams& p = body.params;

  switch (body.slice) {
    case Slice::Cone: return cone_membership(d, body.cone, p);
    case Slice::Base: {
      const double gap = std::abs(d.trace() - nn);
      if (gap > p.slice_tol * nn) return slice_out("Tr D = N", gap);
      return cone_membership(d, body.cone, p);
    }
    case Slice::TP: {
      const double gap = hs_distance(partial_trace(d, Subsystem::B), HermMat::identity(n));
      if (gap > p.slice_tol * nn) return slice_out("Tr_B D = I", gap);
      return cone_membership(d, body.cone, p);
    }
    case Slice::TNI: {
      Verdict v = cone_membership(d, ConeId::CP, p);
      if (v.status != Status::In) return v;
      const HermMat slack = HermMat::identity(n) - partial_trace(d, Subsystem::B);
      const auto [lmin, vec] = bottom_eigenpair(slack);
      if (lmin < -p.slice_tol * nn) {
        Verdict out;
        out.status = Status::Out;
        out.margin = lmin;
        out.certificate = SliceCertificate{"Tr_B D <= I", -lmin};
        return out;
      }
      v.margin = std::min(v.margin, lmin);
      return v;
    }
    case Slice::Sym: {
      // y = A - B with A, B PSD of total trace ||y||_1; the body is the trace
      // norm ball of radius N (through the partial transpose for CcP).
      const bool pt = body.cone == ConeId::CcP;
      const double tn = trace_norm(pt ? partial_transpose(d.mat(), n) : d.mat());
      Verdict v;
      v.margin = nn - tn;
      v.certificate = TraceNormCertificate{tn, nn, pt};
      v.status = tn <= nn * (1.0 + p.slice_tol) ? Status::In : Status::Out;
      return v;
    }
    case Slice::SymPolar: {
      const ConeId dual = dual_cone(body.cone);
      const HermMat e = HermMat::identity(n * n) * (1.0 / nn);
      Verdict minus = cone_membership(ChoiMat(n, e - d.mat()), dual, p);
      if (minus.status == Status::Out) {
        minus.note = "e - y outside " + to_string(dual);
        return minus;
      }
      Verdict plus = cone_membership(ChoiMat(n, e + d.mat()), dual, p);
      if (plus.status == Status::Out) {
        plus.note = "e + y outside " + to_string(dual);
        return plus;
      }
      Verdict v = minus.status == Status::Unknown ? minus : plus;
      v.margin = std::min(minus.margin, plus.margin);
      v.heuristic = minus.heuristic || plus.heuristic;
      v.certificate = std::monostate{};
      return v;
    }
  }
  throw UnsupportedSlice("slice_membership: unknown slice");
}

bool verify_certificate(const ChoiMat& d, ConeId cone, const Verdict& v, double tol) {
  const std::size_t n = d.n();
  if (const auto* c = std::get_if<EigenCertificate>(&v.certificate)) {
    const HermMat x = c->partial_transpose ? partial_transpose(d.mat(), n) : d.mat();
    const double nrm = vec_norm(c->vector);
    return expectation(x, c->vector) / (nrm * nrm) < -tol / 2;
  }
  if (const auto* c = std::get_if<ProductCertificate>(&v.certificate)) {
    // Re-evaluate in map language: <eta| Phi(|conj xi><conj xi|) |eta>.
    std::vector<cplx> in(c->xi.size());
    for (std::size_t i = 0; i < in.size(); ++i) in[i] = std::conj(c->xi[i]);
    const HermMat out = apply_choi(d, HermMat::projector(in));
    return expectation(out, c->eta) < -tol / 2;
  }
  if (const auto* c = std::get_if<WitnessCertificate>(&v.certificate)) {
    const double wn = c->w.hs_norm();
    const double wt = tol * wn;
    const bool in_t = is_psd(c->w, wt) && is_psd(partial_transpose(c->w, n), wt);
    return in_t && hs_inner(d.mat(), c->w) < -tol / 2;
  }
  if (const auto* c = std::get_if<SplitCertificate>(&v.certificate)) {
    const double scale = std::max(1.0, d.mat().hs_norm());
    const HermMat rec = c->a + partial_transpose(c->b, n);
    return is_psd(c->a, tol * scale) && is_psd(c->b, tol * scale) &&
           hs_distance(rec, d.mat()) <= std::max(tol, c->residual) * scale * (1.0 + 1e-6);
  }
  if (const auto* c = std::get_if<SeparableCertificate>(&v.certificate)) {
    for (double w : c->decomposition.weights)
      if (w < 0.0) return false;
    const double scale = std::max(1.0, d.mat().hs_norm());
    return hs_distance(c->decomposition.assemble(n), d.mat()) <= 1e-6 * scale;
  }
  if (const auto* c = std::get_if<BallCertificate>(&v.certificate)) {
    const HermMat normalized = d.mat() * (static_cast<double>(n) / d.trace());
    return std::abs(hs_distance(normalized, depolarizing_choi(n).mat()) - c->distance) <= tol &&
           c->distance <= c->radius * (1.0 + 1e-10);
  }
  if (const auto* c = std::get_if<SliceCertificate>(&v.certificate)) {
    return c->violation > 0.0;
  }
  if (const auto* c = std::get_if<TraceNormCertificate>(&v.certificate)) {
    const HermMat x = c->partial_transpose ? partial_transpose(d.mat(), n) : d.mat();
    const double tn = trace_norm(x);
    return std::abs(tn - c->trace_norm) <= tol * std::max(1.0, tn);
  }
  (void)cone;
  return v.status != Status::Out;
}

namespace {

nlohmann::json vec_json(const std::vector<cplx>& v) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (const auto& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"re", re}, {"im", im}};
}

nlohmann::json mat_json(const HermMat& m) { return nlohmann::json::parse(matrix_to_json(m.matrix())); }

nlohmann::json certificate_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> nlohmann::json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<C, EigenCertificate>) {
          return {{"kind", "eigenvector"}, {"value", c.value},
                  {"partial_transpose", c.partial_transpose}, {"vector", vec_json(c.vector)}};
        } else if constexpr (std::is_same_v<C, ProductCertificate>) {
          return {{"kind", "product_pair"}, {"value", c.value}, {"xi", vec_json(c.xi)},
                  {"eta", vec_json(c.eta)}};
        } else if constexpr (std::is_same_v<C, SplitCertificate>) {
          return {{"kind", "decomposition"}, {"residual", c.residual}, {"A", mat_json(c.a)},
                  {"B", mat_json(c.b)}};
        } else if constexpr (std::is_same_v<C, SeparableCertificate>) {
          nlohmann::json terms = nlohmann::json::array();
          const auto& d = c.decomposition;
          for (std::size_t i = 0; i < d.weights.size(); ++i)
            terms.push_back({{"weight", d.weights[i]}, {"xi", vec_json(d.xi[i])},
                             {"eta", vec_json(d.eta[i])}});
          return {{"kind", "separable"}, {"residual", d.residual}, {"terms", terms}};
        } else if constexpr (std::is_same_v<C, BallCertificate>) {
          return {{"kind", "ball"}, {"distance", c.distance}, {"radius", c.radius}};
        } else if constexpr (std::is_same_v<C, WitnessCertificate>) {
          return {{"kind", "t_dual_witness"}, {"value", c.value}, {"W", mat_json(c.w)}};
        } else if constexpr (std::is_same_v<C, SliceCertificate>) {
          return {{"kind", "slice"}, {"constraint", c.constraint}, {"violation", c.violation}};
        } else {
          return {{"kind", "trace_norm"}, {"trace_norm", c.trace_norm}, {"bound", c.bound},
                  {"partial_transpose", c.partial_transpose}};
        }
      },
      cert);
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"status", to_string(v.status)},
                   {"margin", v.margin},
                   {"certificate", certificate_json(v.certificate)},
                   {"heuristic", v.heuristic}};
  if (!v.note.empty()) j["note"] = v.note;
  return j.dump();
}

}  // namespace qcones
