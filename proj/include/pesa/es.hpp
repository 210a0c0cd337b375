#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pesa/core.hpp"
#include "pesa/rng.hpp"

namespace pesa {

struct ESConfig {
  int mu = 30;         // survivors
  int mu_replay = 30;  // memory injections per generation
  int lambda = 60;     // offspring
  double cx_prob = 0.6;
  double mut_prob = 0.15;
  // 0 means "use the dimension-dependent default" (Schwefel rates,
  // strategy_min = 1/n).
  double tau = 0.0;
  double tau_prime = 0.0;
  double strategy_min = 0.0;
  double strategy_max = 0.5;

  double resolved_tau(Eigen::Index n) const;
  double resolved_tau_prime(Eigen::Index n) const;
  double resolved_strategy_min(Eigen::Index n) const;
};

/// Candidate plus per-attribute mutation strengths, expressed as fractions
/// of the per-dimension range. Fitness is stale (unset) after any variation
/// operator until re-evaluated.
struct ESIndividual {
  Eigen::VectorXd x;
  Eigen::VectorXd strategy;
  std::optional<double> fitness;

  double y() const {
    if (!fitness) throw std::logic_error("ESIndividual: stale fitness read");
    return *fitness;
  }
};

/// Log-normal strategy adaptation followed by Gaussian position mutation.
ESIndividual mutate(const ESIndividual& ind, const SearchSpace& space,
                    const ESConfig& cfg, RandomStream& rng);

/// Classical two-point crossover of x and strategy vectors. n < 3 falls
/// back to a one-point swap.
std::pair<ESIndividual, ESIndividual> crossover(const ESIndividual& a,
                                                const ESIndividual& b,
                                                RandomStream& rng);

/// Produce lambda offspring; each comes from exactly one operator chosen
/// with probabilities cx_prob / mut_prob / remainder (reproduction).
std::vector<ESIndividual> generate_offspring(
    const std::vector<ESIndividual>& parents, const SearchSpace& space,
    const ESConfig& cfg, RandomStream& rng);

/// One (mu + mu', lambda) generation with comma selection: offspring are
/// generated from survivors plus memory injections, evaluated, and the mu
/// best offspring returned ascending by fitness. eval_log, when given,
/// collects the fitness of every offspring evaluated.
std::vector<ESIndividual> es_generation(
    const std::vector<ESIndividual>& survivors,
    const std::vector<Candidate>& injected, const FitnessFunction& fitness,
    const ESConfig& cfg, RandomStream& rng,
    std::vector<double>* eval_log = nullptr);

/// Wrap a memory candidate as an individual with a fresh random strategy.
ESIndividual wrap_candidate(const Candidate& c, const SearchSpace& space,
                            const ESConfig& cfg, RandomStream& rng);

}  // namespace pesa
