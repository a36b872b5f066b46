#pragma once

#include "experiment.hpp"
#include "qcones/report.hpp"

namespace qcones::cli {

/// Runs one command. Human-readable lines go to `summary`.
GeometryReport run_command(const ExperimentConfig& cfg, std::string& summary);

/// Writes `count` hit-and-run samples of the configured body.
void dump_samples(const ExperimentConfig& cfg, const std::string& path, std::size_t count);

}  // namespace qcones::cli
