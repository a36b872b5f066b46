#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace qcones::cli {

/// Invalid flags or combinations; exit code 3.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything that determines a report. Output paths are not part of it.
struct ExperimentConfig {
  std::string command;
  std::size_t n = 2;
  std::string cone = "CP";
  std::string slice;           // empty: command default
  std::uint64_t seed = 1;
  int chains = 8;
  std::size_t steps = 400;     // samples per chain and phase
  std::size_t dirs = 10000;
  std::size_t probes = 1000;
  std::size_t pairs = 100000;
  std::size_t samples = 10000;
  std::string suite = "bases";
  std::string input;           // membership input file
  std::string input_digest;    // FNV-1a of its bytes

  /// Sorted key=value lines, one per field relevant to `command`.
  std::string canonical() const;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t x);

/// Report bodies keyed by the config hash. A hit returns the stored bytes.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  struct Entry {
    std::string json;
    std::string csv;
  };
  std::optional<Entry> load(const ExperimentConfig& cfg) const;
  void store(const ExperimentConfig& cfg, const Entry& e) const;

 private:
  std::filesystem::path stem(const ExperimentConfig& cfg) const;
  std::filesystem::path dir_;
  mutable std::mutex mu_;
};

/// Prints "[qcones] <label> running <t> s" to stderr every `period`.
class Heartbeat {
 public:
  Heartbeat(std::string label, std::chrono::seconds period = std::chrono::seconds(10));
  ~Heartbeat();
  Heartbeat(const Heartbeat&) = delete;
  Heartbeat& operator=(const Heartbeat&) = delete;

 private:
  std::string label_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

void progress(const std::string& msg);

}  // namespace qcones::cli
