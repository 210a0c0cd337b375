#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pesa/pesa.hpp"

namespace pesa {

struct ExperimentConfig {
  std::vector<std::string> functions;
  int dim = 50;
  std::vector<Algorithm> algorithms;
  std::vector<std::uint64_t> seeds{0};
  PESAConfig base;
  std::string out_dir = "pesa_out";
  bool parallel = false;
  bool dump_memory = false;

  void validate() const;  // throws std::invalid_argument
};

struct RunRecord {
  std::string function;
  Algorithm algorithm = Algorithm::pesa;
  std::uint64_t seed = 0;
  std::vector<GenerationRecord> history;
  double final_best = 0.0;
  std::optional<int> gens_to_threshold;  // empty when never reached
  double wall_seconds = 0.0;
  bool failed = false;
  std::string error;
  std::vector<Candidate> memory_dump;  // pesa runs with dump enabled
};

struct RunArtifacts {
  std::vector<RunRecord> runs;
};

/// Throws if the directory cannot be created or written.
void preflight_output_dir(const std::string& dir);

RunArtifacts run_experiment(const ExperimentConfig& cfg);

/// Writes convergence.csv, summary.csv, config.json (the resolved config
/// echo), and memory dumps when requested.
void write_outputs(const RunArtifacts& artifacts, const ExperimentConfig& cfg,
                   const std::string& dir);

/// Convergence threshold used for gens-to-threshold: optimum + 1e-2.
double convergence_threshold(const std::string& function_name);

std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const std::string& text);

}  // namespace pesa
