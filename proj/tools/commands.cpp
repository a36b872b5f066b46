#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "json.hpp"

#include "qcones/bodies.hpp"
#include "qcones/cones.hpp"
#include "qcones/matrix_io.hpp"
#include "qcones/random.hpp"
#include "qcones/sample_dump.hpp"
#include "qcones/special.hpp"
#include "qcones/verify.hpp"
#include "qcones/volume.hpp"
#include "qcones/walk.hpp"
#include "qcones/width.hpp"

namespace qcones::cli {

namespace {

constexpr double kPairTol = 1e-9;
constexpr double kAnalyticTol = 1e-9;
constexpr std::size_t kVolumeMaxN = 2;

ConeId cone_of(const ExperimentConfig& cfg) {
  const auto c = parse_cone(cfg.cone);
  if (!c) throw ConfigError("unknown cone '" + cfg.cone + "' (P, D, CP, CcP, T, SP)");
  return *c;
}

Slice slice_of(const ExperimentConfig& cfg) {
  const auto s = parse_slice(cfg.slice);
  if (!s) throw ConfigError("unknown slice '" + cfg.slice + "' (cone, base, tp, tni, sym, sympolar)");
  return *s;
}

BodySpec body_of(const ExperimentConfig& cfg) {
  BodySpec b{cone_of(cfg), cfg.n, slice_of(cfg), {}};
  try {
    validate(b);
  } catch (const UnsupportedSlice& e) {
    throw ConfigError(e.what());
  }
  return b;
}

VolumeSchedule schedule_of(const ExperimentConfig& cfg, std::uint64_t salt = 0) {
  VolumeSchedule s;
  s.chains = cfg.chains;
  s.samples_per_phase = cfg.steps;
  s.seed = salt == 0 ? cfg.seed : splitmix64(cfg.seed + salt);
  return s;
}

void refuse_large_volume(const BodySpec& b) {
  if (b.n <= kVolumeMaxN) return;
  throw ConfigError("refusing volume for " + b.name() + ": its walk runs in dimension " +
                    std::to_string(b.ambient_dim()) +
                    ", at or beyond the dimension-80 ceiling of desk-scale hit-and-run (N = 2 only)");
}

VolumeResult run_volume(const BodySpec& b, const VolumeSchedule& s) {
  refuse_large_volume(b);
  Heartbeat hb("volume " + b.name());
  return volume_mcmc(MatrixBody(b), s);
}

// Bounds on vrad of the body, when known.
std::pair<Interval, std::string> vrad_bounds(const BodySpec& b) {
  const double vcp = vrad_cp_base_exact(b.n);
  if (b.slice == Slice::Base) return {base_vrad_bounds(b.cone, b.n, vcp), base_vrad_bound_ref(b.cone)};
  if (b.slice == Slice::TP && b.cone == ConeId::CP) {
    const double nn = static_cast<double>(b.n * b.n);
    const std::size_t m = b.n * b.n * b.n * b.n - 1;
    const std::size_t k = m - (b.n * b.n - 1);
    const SectionBounds sb = section_bounds(vcp, 1.0 / std::sqrt(nn - 1.0), std::sqrt(nn - 1.0), m, k);
    return {{sb.lo, sb.hi}, "tp section of cp base bound"};
  }
  return {{}, "no bound"};
}

BoundCheck radii_row(const RadiiReport& r) {
  const double failures = static_cast<double>(r.in_failures + r.out_failures) +
                          (r.outer_witness_ok ? 0.0 : 1.0) + (r.inner_witness_ok ? 0.0 : 1.0);
  return make_check(r.body.name(), "radii failures", failures, 0.0, "base radii (N^2-1)^(+-1/2)",
                    0.0, 0.0);
}

std::string radii_details(const RadiiReport& r) {
  nlohmann::ordered_json j;
  j["body"] = r.body.name();
  j["inradius"] = r.inradius;
  j["outradius"] = r.outradius;
  j["in_probes"] = r.in_probes;
  j["in_failures"] = r.in_failures;
  j["out_probes"] = r.out_probes;
  j["out_failures"] = r.out_failures;
  j["max_distance"] = r.max_distance;
  j["outer_witness_distance"] = r.outer_witness_distance;
  j["outer_witness_member"] = r.outer_witness_member;
  j["inner_witness_distance"] = r.inner_witness_distance;
  j["inner_witness_member"] = r.inner_witness_member;
  j["offending"] = r.offending;
  return j.dump();
}

void add_width_rows(GeometryReport& rep, const BodySpec& b, const WidthResult& w) {
  const auto bound = b.slice == Slice::Base ? base_width_bounds(b.cone, b.n) : std::nullopt;
  const std::string ref = bound ? to_string(b.cone) + " base width bound" : "no bound";
  const Interval iv = bound.value_or(Interval{});
  if (w.interval)
    rep.rows.push_back(make_check(b.name(), "width lower", w.lower.value, w.lower.stderr_, ref,
                                  iv.lo, iv.hi));
  rep.rows.push_back(make_check(b.name(), w.interval ? "width upper" : "width", w.upper.value,
                                w.upper.stderr_, ref, iv.lo, iv.hi));
  if (w.heuristic)
    rep.warnings.push_back(b.name() + ": width lower end rests on a heuristic support search");
}

GeometryReport cmd_membership(const ExperimentConfig& cfg) {
  if (cfg.input.empty()) throw ConfigError("membership needs --input <choi.json>");
  HermMat h;
  try {
    h = read_herm_json(cfg.input);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("cannot read input: ") + e.what());
  }
  const std::size_t n = subsystem_dim(h.dim());
  const ChoiMat d(n, h);
  const ConeId cone = cone_of(cfg);
  GeometryReport rep;
  rep.title = "membership";
  Verdict v;
  std::string body = to_string(cone) + "_" + std::to_string(n);
  if (cfg.slice.empty() || cfg.slice == "cone") {
    v = cone_membership(d, cone);
  } else {
    const BodySpec b{cone, n, slice_of(cfg), {}};
    body = b.name();
    v = slice_membership(d, b);
  }
  BoundCheck row = make_check(body, "margin", v.margin, 0.0, "verdict " + to_string(v.status),
                              -INFINITY, INFINITY);
  rep.rows.push_back(row);
  if (v.status == Status::Unknown)
    rep.warnings.push_back(body + ": oracle returned Unknown");
  if (v.heuristic) rep.warnings.push_back(body + ": In verdict rests on a heuristic search");
  rep.details_json = verdict_to_json(v);
  return rep;
}

GeometryReport cmd_volume(const ExperimentConfig& cfg) {
  const BodySpec b = body_of(cfg);
  if (b.slice == Slice::Cone) throw ConfigError("volume needs a bounded slice (base, tp, tni, sym)");
  GeometryReport rep;
  rep.title = "volume";
  const VolumeResult r = run_volume(b, schedule_of(cfg));
  const auto [iv, ref] = vrad_bounds(b);
  rep.rows.push_back(make_check(b.name(), "vrad", r.vrad.value, r.vrad.stderr_, ref, iv.lo, iv.hi));
  if (b.cone == ConeId::CP && b.slice == Slice::Base)
    rep.rows.push_back(make_check(b.name(), "vrad exact", vrad_cp_base_exact(b.n), 0.0, ref, iv.lo,
                                  iv.hi));
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["log_volume"] = r.log_volume;
  j["log_volume_se"] = r.log_volume_se;
  j["stuck_steps"] = r.stuck_steps;
  j["phases"] = nlohmann::ordered_json::array();
  for (const auto& p : r.phases)
    j["phases"].push_back({{"radius", p.radius}, {"ratio", p.ratio}, {"rel_se", p.rel_se},
                           {"samples", p.samples}});
  rep.details_json = j.dump();
  return rep;
}

GeometryReport cmd_width(const ExperimentConfig& cfg) {
  const BodySpec b = body_of(cfg);
  if (b.slice != Slice::Base) throw ConfigError("width supports base slices");
  GeometryReport rep;
  rep.title = "width";
  Heartbeat hb("width " + b.name());
  add_width_rows(rep, b, mean_width_mc(b, cfg.dirs, cfg.seed));
  return rep;
}

GeometryReport cmd_duality(const ExperimentConfig& cfg) {
  const ConeId c = cone_of(cfg);
  if (c == ConeId::P || c == ConeId::SP)
    throw ConfigError("duality pairs need samplers for C and C*; P has none (use CP, CcP, T, D)");
  const ConeId dc = dual_cone(c);
  GeometryReport rep;
  rep.title = "duality";
  RngStream rng(cfg.seed, 0xd0a1);
  double worst = -INFINITY;
  {
    Heartbeat hb("duality " + to_string(c));
    for (std::size_t k = 0; k < cfg.pairs; ++k)
      worst = std::max(worst, duality_pair_value(random_base_point(c, cfg.n, rng),
                                                 random_base_point(dc, cfg.n, rng)));
  }
  const std::string body = "(" + to_string(c) + ", " + to_string(dc) + ")_" + std::to_string(cfg.n) + "^base";
  rep.rows.push_back(
      make_check(body, "max pair value", worst, 0.0, "dual base pairing bound", -INFINITY, 1.0 + kPairTol));
  return rep;
}

GeometryReport cmd_radii(const ExperimentConfig& cfg) {
  const BodySpec b = body_of(cfg);
  GeometryReport rep;
  rep.title = "radii";
  RadiiReport r;
  try {
    Heartbeat hb("radii " + b.name());
    r = radii_verify(b, cfg.probes, cfg.seed);
  } catch (const UnsupportedSlice& e) {
    throw ConfigError(e.what());
  }
  rep.rows.push_back(radii_row(r));
  rep.details_json = radii_details(r);
  return rep;
}

GeometryReport cmd_tables(const ExperimentConfig& cfg) {
  GeometryReport rep;
  rep.title = "tables " + cfg.suite;
  std::vector<BodySpec> bodies;
  if (cfg.suite == "bases") {
    for (ConeId c : {ConeId::P, ConeId::D, ConeId::CP, ConeId::T, ConeId::SP})
      bodies.push_back({c, cfg.n, Slice::Base, {}});
  } else if (cfg.suite == "tp") {
    for (ConeId c : {ConeId::CP, ConeId::T}) bodies.push_back({c, cfg.n, Slice::TP, {}});
  } else {
    throw ConfigError("unknown suite '" + cfg.suite + "' (bases, tp)");
  }
  std::map<ConeId, VolumeResult> vols;
  nlohmann::ordered_json radii = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const BodySpec& b = bodies[i];
    const auto [iv, ref] = vrad_bounds(b);
    progress("tables: " + b.name());
    if (b.n > kVolumeMaxN) {
      rep.rows.push_back(pending_check(b.name(), "vrad", ref, iv.lo, iv.hi));
      rep.warnings.push_back(b.name() + ": vrad pending, walk dimension at the dimension-80 ceiling");
    } else {
      // At N = 2, P = D and SP = T, so those estimates are shared.
      ConeId key = b.cone;
      if (b.slice == Slice::Base && b.cone == ConeId::P) key = ConeId::D;
      if (b.slice == Slice::Base && b.cone == ConeId::SP) key = ConeId::T;
      if (key != b.cone)
        rep.warnings.push_back(b.name() + ": vrad shared with " + to_string(key) +
                               "_2 (the cones coincide at N = 2)");
      if (!vols.count(key)) {
        BodySpec kb = b;
        kb.cone = key;
        try {
          vols[key] = run_volume(kb, schedule_of(cfg, static_cast<std::uint64_t>(key) + 1));
        } catch (const MixingError& e) {
          vols[key] = VolumeResult{};
          rep.warnings.push_back(kb.name() + ": volume aborted: " + e.what());
        }
      }
      const VolumeResult& r = vols[key];
      if (r.dim == 0)
        rep.rows.push_back(pending_check(b.name(), "vrad", ref, iv.lo, iv.hi));
      else
        rep.rows.push_back(make_check(b.name(), "vrad", r.vrad.value, r.vrad.stderr_, ref, iv.lo, iv.hi));
    }
    if (b.cone == ConeId::CP && b.slice == Slice::Base)
      rep.rows.push_back(make_check(b.name(), "vrad exact", vrad_cp_base_exact(b.n), 0.0, ref,
                                    iv.lo, iv.hi));
    if (b.slice == Slice::Base) {
      Heartbeat hb("width " + b.name());
      add_width_rows(rep, b, mean_width_mc(b, cfg.dirs, splitmix64(cfg.seed + 100 + i)));
    } else {
      rep.rows.push_back(pending_check(b.name(), "width", "no bound", -INFINITY, INFINITY));
    }
    Heartbeat hb("radii " + b.name());
    const RadiiReport rr = radii_verify(b, cfg.probes, splitmix64(cfg.seed + 200 + i));
    rep.rows.push_back(radii_row(rr));
    radii.push_back(nlohmann::ordered_json::parse(radii_details(rr)));
  }
  nlohmann::ordered_json j;
  j["radii"] = radii;
  rep.details_json = j.dump();
  return rep;
}

GeometryReport cmd_tni(const ExperimentConfig& cfg) {
  if (cfg.n > kVolumeMaxN)
    throw ConfigError("refusing tni at N = " + std::to_string(cfg.n) +
                      ": the TNI walk reaches the dimension-80 ceiling of desk-scale hit-and-run");
  GeometryReport rep;
  rep.title = "tni";
  TniReport r;
  {
    Heartbeat hb("tni");
    r = tni_experiment(cfg.n, schedule_of(cfg), cfg.samples);
  }
  const std::string body = "CP_" + std::to_string(cfg.n) + "^tni";
  if (r.aborted) {
    rep.rows.push_back(pending_check(body, "volume ratio", "tni volume ratio bound", r.bracket_lo,
                                     r.bracket_hi));
    rep.warnings.push_back("tni: MCMC aborted: " + r.message);
  } else {
    rep.rows.push_back(make_check(body, "volume ratio", r.ratio, r.ratio * r.log_ratio_se,
                                  "tni volume ratio bound", r.bracket_lo, r.bracket_hi, 0.0));
  }
  rep.rows.push_back(make_check(body, "g_M fiber error", r.gm_fiber_error, 0.0,
                                "partial trace fiber identity", -INFINITY, kAnalyticTol));
  rep.rows.push_back(make_check(body, "g_I identity error", r.gm_identity_error, 0.0,
                                "g at identity is the identity", -INFINITY, kAnalyticTol));
  nlohmann::ordered_json j;
  j["log_ratio"] = r.log_ratio;
  j["log_ratio_se"] = r.log_ratio_se;
  j["vrad_tni"] = r.tni.vrad.value;
  j["vrad_tp"] = r.tp.vrad.value;
  j["vrad_interval"] = r.interval.vrad.value;
  j["gm_samples"] = r.gm_samples;
  rep.details_json = j.dump();
  return rep;
}

GeometryReport cmd_no_duality(const ExperimentConfig& cfg) {
  GeometryReport rep;
  rep.title = "no-duality";
  const NoDualityReport r = no_duality_discrepancy(cfg.n, cfg.samples, cfg.seed);
  const std::string body = "CP_" + std::to_string(cfg.n) + "^tp";
  const double nn = static_cast<double>(cfg.n);
  rep.rows.push_back(make_check(body, "discrepancy ratio", r.ratio, 0.0, "tp no-duality witness",
                                nn - kAnalyticTol, INFINITY));
  rep.rows.push_back(make_check(body, "max sampled pairing", r.max_sampled, 0.0,
                                "tp pairing denominator 1 - 1/N", -INFINITY,
                                r.denominator_bound + kAnalyticTol));
  rep.rows.push_back(make_check(body, "x in cp base", r.x_in_cp_base ? 1.0 : 0.0, 0.0,
                                "witness point membership", 1.0, 1.0));
  return rep;
}

GeometryReport cmd_section_bounds(const ExperimentConfig& cfg) {
  GeometryReport rep;
  rep.title = "section-bounds";
  const BodySpec b{ConeId::CP, cfg.n, Slice::TP, {}};
  const auto [iv, ref] = vrad_bounds(b);
  rep.rows.push_back(make_check(b.name(), "section lower", iv.lo, 0.0, ref, -INFINITY, INFINITY));
  rep.rows.push_back(make_check(b.name(), "section upper", iv.hi, 0.0, ref, -INFINITY, INFINITY));
  if (cfg.n <= kVolumeMaxN && cfg.steps > 0) {
    const VolumeResult r = run_volume(b, schedule_of(cfg));
    rep.rows.push_back(make_check(b.name(), "vrad", r.vrad.value, r.vrad.stderr_, ref, iv.lo, iv.hi));
  }
  // [-1,1]^3 cut by a coordinate plane.
  const SectionBounds cb = section_bounds(vrad_from_vol(8.0, 3), 1.0, std::sqrt(3.0), 3, 2);
  rep.rows.push_back(make_check("cube_3 section", "vrad", vrad_from_vol(4.0, 2), 0.0,
                                "cube plane section bound", cb.lo, cb.hi, 0.0));
  return rep;
}

}  // namespace

GeometryReport run_command(const ExperimentConfig& cfg, std::string& summary) {
  GeometryReport rep;
  const auto& c = cfg.command;
  if (c == "membership") rep = cmd_membership(cfg);
  else if (c == "volume") rep = cmd_volume(cfg);
  else if (c == "width") rep = cmd_width(cfg);
  else if (c == "duality") rep = cmd_duality(cfg);
  else if (c == "radii") rep = cmd_radii(cfg);
  else if (c == "tables") rep = cmd_tables(cfg);
  else if (c == "tni") rep = cmd_tni(cfg);
  else if (c == "no-duality") rep = cmd_no_duality(cfg);
  else if (c == "section-bounds") rep = cmd_section_bounds(cfg);
  else throw ConfigError("unknown command '" + c + "'");
  rep.seed = cfg.seed;
  for (const auto& r : rep.rows) {
    char buf[256];
    if (r.pending)
      std::snprintf(buf, sizeof buf, "%-18s %-22s pending\n", r.body.c_str(), r.quantity.c_str());
    else
      std::snprintf(buf, sizeof buf, "%-18s %-22s %.6g +- %.2g  [%.6g, %.6g]  %s\n",
                    r.body.c_str(), r.quantity.c_str(), r.value, r.stderr_, r.lo, r.hi,
                    r.pass ? "pass" : "FAIL");
    summary += buf;
  }
  for (const auto& w : rep.warnings) summary += "warning: " + w + "\n";
  if (c == "membership") {
    const auto j = nlohmann::json::parse(rep.details_json);
    summary += "verdict: " + j.value("status", std::string("?")) + "\n";
  }
  return rep;
}

void dump_samples(const ExperimentConfig& cfg, const std::string& path, std::size_t count) {
  const BodySpec b = body_of(cfg);
  refuse_large_volume(b);
  const MatrixBody body(b);
  WalkState st = walk_start(body);
  RngStream rng(cfg.seed, 0xd5);
  const std::size_t thin = body.dim();
  for (std::size_t k = 0; k < 10 * body.dim(); ++k) hit_and_run_step(body, st, rng);
  std::vector<HermMat> samples;
  samples.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t t = 0; t < thin; ++t) hit_and_run_step(body, st, rng);
    samples.push_back(body.to_matrix(st.x));
  }
  SampleHeader h;
  h.body = b.name();
  h.seed = cfg.seed;
  h.dim = b.n * b.n;
  h.count = count;
  h.steps = st.steps;
  write_sample_dump(path, h, samples);
}

}  // namespace qcones::cli
