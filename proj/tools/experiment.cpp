#include "experiment.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "qcones/report.hpp"

namespace qcones::cli {

std::string ExperimentConfig::canonical() const {
  std::map<std::string, std::string> kv;
  kv["command"] = command;
  kv["n"] = std::to_string(n);
  kv["seed"] = std::to_string(seed);
  kv["version"] = qcones::version();
  const auto& c = command;
  if (c == "membership" || c == "volume" || c == "width" || c == "duality" || c == "radii")
    kv["cone"] = cone;
  if (c == "membership" || c == "volume" || c == "width" || c == "radii") kv["slice"] = slice;
  if (c == "volume" || c == "tables" || c == "tni" || c == "section-bounds") {
    kv["chains"] = std::to_string(chains);
    kv["steps"] = std::to_string(steps);
  }
  if (c == "width" || c == "tables") kv["dirs"] = std::to_string(dirs);
  if (c == "radii" || c == "tables") kv["probes"] = std::to_string(probes);
  if (c == "duality") kv["pairs"] = std::to_string(pairs);
  if (c == "no-duality" || c == "tni") kv["samples"] = std::to_string(samples);
  if (c == "tables") kv["suite"] = suite;
  if (c == "membership") kv["input"] = input_digest;
  std::string out;
  for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

namespace {

std::optional<std::string> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& s) {
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << s;
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace

std::filesystem::path ResultCache::stem(const ExperimentConfig& cfg) const {
  return dir_ / hex64(fnv1a(cfg.canonical()));
}

std::optional<ResultCache::Entry> ResultCache::load(const ExperimentConfig& cfg) const {
  std::lock_guard lock(mu_);
  const auto s = stem(cfg);
  // Guard against hash collisions with the stored config text.
  const auto key = slurp(s.string() + ".config");
  if (!key || *key != cfg.canonical()) return std::nullopt;
  auto json = slurp(s.string() + ".json");
  auto csv = slurp(s.string() + ".csv");
  if (!json || !csv) return std::nullopt;
  return Entry{std::move(*json), std::move(*csv)};
}

void ResultCache::store(const ExperimentConfig& cfg, const Entry& e) const {
  std::lock_guard lock(mu_);
  std::filesystem::create_directories(dir_);
  const auto s = stem(cfg);
  spit(s.string() + ".json", e.json);
  spit(s.string() + ".csv", e.csv);
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  spit(s.string() + ".meta",
       std::string("version=") + qcones::version() + "\ncreated=" + stamp + "\n");
  spit(s.string() + ".config", cfg.canonical());
}

Heartbeat::Heartbeat(std::string label, std::chrono::seconds period) : label_(std::move(label)) {
  const auto start = std::chrono::steady_clock::now();
  thread_ = std::thread([this, period, start] {
    std::unique_lock lock(mu_);
    while (!cv_.wait_for(lock, period, [this] { return done_; })) {
      const auto t = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      std::fprintf(stderr, "[qcones] %s running %lld s\n", label_.c_str(),
                   static_cast<long long>(t));
    }
  });
}

Heartbeat::~Heartbeat() {
  {
    std::lock_guard lock(mu_);
    done_ = true;
  }
  cv_.notify_all();
  thread_.join();
}

void progress(const std::string& msg) { std::fprintf(stderr, "[qcones] %s\n", msg.c_str()); }

}  // namespace qcones::cli
