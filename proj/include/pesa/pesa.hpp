#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pesa/core.hpp"
#include "pesa/es.hpp"
#include "pesa/memory.hpp"
#include "pesa/pso.hpp"
#include "pesa/rng.hpp"
#include "pesa/sa.hpp"

namespace pesa {

enum class Algorithm { pesa, es, pso, sa };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

struct PESAConfig {
  int n_gen = 100;
  int n_warmup = 500;
  ESConfig es;
  PSOConfig pso;
  SAConfig sa;
  MemoryConfig memory;
  std::uint64_t seed = 0;
  bool parallel = false;  // fork-join the three algorithms per generation
};

struct GenerationRecord {
  int generation = 0;
  // per-algorithm generation minimum; NaN for algorithms not run
  double es_best = 0.0;
  double pso_best = 0.0;
  double sa_best = 0.0;
  double gen_min = 0.0;
  double best_so_far = 0.0;
  // over all individuals evaluated this generation
  double mean = 0.0;
  double stddev = 0.0;
  long evals_cumulative = 0;
  double alpha = 0.0;
};

struct RunResult {
  Candidate best;
  std::vector<GenerationRecord> history;
};

/// Mid-run state of a PESA search, exposed for generation-level stepping.
struct PesaState {
  PESAConfig cfg;
  ReplayMemory memory;
  std::vector<ESIndividual> es_pop;
  std::vector<Particle> swarm;
  SAChain chain;
  RandomStream es_rng;
  RandomStream pso_rng;
  RandomStream sa_rng;
  RandomStream mem_rng;
  int generation = 0;
  long evals = 0;
};

/// Warmup phase: draw, evaluate, and insert n_warmup uniform samples;
/// alpha starts at alpha_init. pool_out, when given, receives the raw
/// samples in draw order (the shared starting pool for standalone runs).
ReplayMemory warmup(const PESAConfig& cfg, const FitnessFunction& fitness,
                    RandomStream& warmup_rng,
                    std::vector<Candidate>* pool_out = nullptr);

/// Warmup plus population initialization from the warmup pool (best mu
/// individuals for ES, best eta particles for PSO, best sample for SA).
PesaState pesa_init(const PESAConfig& cfg, const FitnessFunction& fitness);

/// One PESA generation: prioritized draws, the three algorithm generations
/// against the same memory snapshot (serial or forked per cfg.parallel),
/// memory update, alpha annealing.
GenerationRecord pesa_generation(PesaState& state,
                                 const FitnessFunction& fitness);

/// final_memory, when given, receives the end-of-run replay memory.
RunResult run_pesa(const PESAConfig& cfg, const FitnessFunction& fitness,
                   ReplayMemory* final_memory = nullptr);

/// Run one algorithm decoupled from the memory, starting from the same
/// warmup pool as a PESA run with the same seed.
RunResult run_standalone(Algorithm algo, const PESAConfig& cfg,
                         const FitnessFunction& fitness);

}  // namespace pesa
