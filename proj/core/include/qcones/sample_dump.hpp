#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qcones/matrix.hpp"

namespace qcones {

// Binary layout:
//   "QCSAMP1\n"                      8-byte magic
//   uint64 little-endian             header length L
//   L bytes                          JSON header {"body", "seed", "count", "dim", ...}
//   count * dim * dim * 2 doubles    row-major (re, im), little-endian

struct SampleHeader {
  std::string body;
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::uint64_t steps = 0;
};

void write_sample_dump(const std::filesystem::path& path, const SampleHeader& header,
                       const std::vector<HermMat>& samples);

struct SampleDump {
  SampleHeader header;
  std::vector<HermMat> samples;
};
SampleDump read_sample_dump(const std::filesystem::path& path);

/// CSV with one row per sample: index, trace, distance to `center`, lambda_min.
void write_sample_observables(const std::filesystem::path& path, const HermMat& center,
                              const std::vector<HermMat>& samples);

}  // namespace qcones
