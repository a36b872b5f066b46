// qcones: command-line driver for the cone geometry experiments.
// Exit codes: 0 success, 1 runtime error, 2 bound violation, 3 config error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "commands.hpp"
#include "experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitViolation = 2;
constexpr int kExitConfig = 3;

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qcones::cli::ConfigError("cannot write " + path);
  out << bytes;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qcones::cli::ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qcones::cli;
  CLI::App app{"qcones: geometry of cones of quantum maps"};
  app.set_version_flag("--version", qcones::version());
  app.set_config("--config", "", "INI file of key=value defaults; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();

  ExperimentConfig cfg;
  std::string out, cache_dir, dump;
  std::size_t dump_count = 1000;
  bool json = false;
  app.add_option("--n", cfg.n, "Subsystem dimension N")->check(CLI::Range(2, 5));
  app.add_option("--cone", cfg.cone, "P, D, CP, CcP, T or SP");
  app.add_option("--slice", cfg.slice, "cone, base, tp, tni, sym or sympolar");
  app.add_option("--seed", cfg.seed, "Master seed");
  app.add_option("--chains", cfg.chains, "Independent walk chains")->check(CLI::PositiveNumber);
  app.add_option("--steps", cfg.steps, "Samples per chain and phase");
  app.add_option("--dirs", cfg.dirs, "Directions for mean width")->check(CLI::PositiveNumber);
  app.add_option("--probes", cfg.probes, "Radii probes")->check(CLI::PositiveNumber);
  app.add_option("--pairs", cfg.pairs, "Duality pairs")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Random channels or g_M samples");
  app.add_option("--suite", cfg.suite, "Table suite: bases or tp");
  app.add_option("--input", cfg.input, "Choi matrix JSON for membership");
  app.add_option("--out", out, "Write <out>.json and <out>.csv");
  app.add_option("--cache-dir", cache_dir, "Result cache directory");
  app.add_option("--dump", dump, "Write hit-and-run samples of the body (volume only)");
  app.add_option("--dump-count", dump_count, "Samples written by --dump");
  app.add_flag("--json", json, "Print the JSON report to standard output");

  for (const char* name : {"membership", "volume", "width", "duality", "radii", "tables", "tni",
                           "no-duality", "section-bounds"})
    app.add_subcommand(name)->callback([&cfg, name] { cfg.command = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (cfg.slice.empty() && cfg.command != "membership") cfg.slice = "base";
    if (!cfg.input.empty()) cfg.input_digest = hex64(fnv1a(read_bytes(cfg.input)));

    std::string json_text, csv_text, summary;
    bool pass = true;
    std::optional<ResultCache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);
    if (auto hit = cache ? cache->load(cfg) : std::nullopt) {
      progress("cache hit " + hex64(fnv1a(cfg.canonical())));
      json_text = std::move(hit->json);
      csv_text = std::move(hit->csv);
      pass = nlohmann::json::parse(json_text).value("all_pass", false);
      summary = csv_text;
    } else {
      qcones::GeometryReport rep = run_command(cfg, summary);
      json_text = rep.to_json();
      csv_text = rep.to_csv();
      pass = rep.all_pass();
      if (cache) cache->store(cfg, {json_text, csv_text});
    }
    if (!dump.empty()) {
      if (cfg.command != "volume") throw ConfigError("--dump applies to volume only");
      dump_samples(cfg, dump, dump_count);
    }
    if (!out.empty()) {
      write_file(out + ".json", json_text);
      write_file(out + ".csv", csv_text);
    }
    if (json)
      std::fwrite(json_text.data(), 1, json_text.size(), stdout);
    else
      std::fwrite(summary.data(), 1, summary.size(), stdout);
    return pass ? kExitOk : kExitViolation;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "qcones: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qcones: %s\n", e.what());
    return kExitRuntime;
  }
}
