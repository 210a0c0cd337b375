#pragma once

#include <vector>

#include "pesa/core.hpp"
#include "pesa/rng.hpp"

namespace pesa {

struct SAConfig {
  double t_max = 10000.0;
  double t_min = 1.0;
  double chi = 0.1;             // per-attribute perturbation probability
  int chain_size = 60;          // steps per generation
  double alpha_backdoor = 0.1;  // probability of greedy replay per step
  double step_scale = 0.05;     // Gaussian step as fraction of range
};

/// Single annealing chain. The step counter is cumulative across
/// generations so the fast schedule spans the whole evolution.
struct SAChain {
  Eigen::VectorXd x_prev;
  double e_prev = 0.0;
  Eigen::VectorXd best_x;
  double best_y = 0.0;
  long step_count = 0;  // steps consumed so far
  long total_steps = 0; // N_steps

  static SAChain start(const Candidate& init, long total_steps);
};

/// Fast annealing schedule T(N) = T_max exp(-ln(T_max/T_min) N / N_steps),
/// 1 <= N <= N_steps.
double temperature(long step, long total_steps, const SAConfig& cfg);

/// Perturb each attribute with probability chi by a Gaussian step scaled to
/// the dimension range; if no attribute fires, perturb one chosen uniformly
/// so the proposal always differs.
Eigen::VectorXd random_walk(const Eigen::VectorXd& x, double chi,
                            double step_scale, const SearchSpace& space,
                            RandomStream& rng);

bool metropolis_accept(double delta_e, double temp, RandomStream& rng);

struct SAGenerationResult {
  Candidate last;
  Candidate best;
  int evaluations = 0;        // non-backdoor steps (fresh fitness calls)
  std::vector<double> state_y;  // energy of every proposal considered
};

/// One annealing generation of chain_size steps. theta_init, when given,
/// resets the chain state first (PESA mode); null continues the chain
/// (standalone mode). memory_best, when given, enables backdoor greedy
/// replay: with probability alpha_backdoor a step proposes the memory's
/// best sample at its stored fitness instead of a random walk.
SAGenerationResult sa_generation(SAChain& chain, const Candidate* theta_init,
                                 const Candidate* memory_best,
                                 const FitnessFunction& fitness,
                                 const SAConfig& cfg, RandomStream& rng);

}  // namespace pesa
