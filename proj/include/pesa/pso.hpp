#pragma once

#include <vector>

#include "pesa/core.hpp"
#include "pesa/rng.hpp"

namespace pesa {

struct PSOConfig {
  int eta = 30;         // survivors
  int eta_replay = 30;  // memory injections per generation
  double c1 = 2.05;     // cognitive
  double c2 = 2.05;     // social
};

struct Particle {
  Eigen::VectorXd x;
  double y = 0.0;
  Eigen::VectorXd velocity;
  Eigen::VectorXd pbest_x;
  double pbest_y = 0.0;
};

/// Clerc-Kennedy constriction coefficient K = 2/|2 - phi - sqrt(phi^2 - 4 phi)|.
/// Requires phi = c1 + c2 > 4.
double constriction(double c1, double c2);

/// Velocity update with explicit per-coordinate random factors (test hook).
Eigen::VectorXd velocity_update_with(const Particle& p,
                                     const Eigen::VectorXd& gbest_x, double K,
                                     double c1, double c2,
                                     const Eigen::VectorXd& r1,
                                     const Eigen::VectorXd& r2);

/// Velocity update with fresh U[0,1] factors drawn per coordinate.
/// Velocities are never clamped.
Eigen::VectorXd velocity_update(const Particle& p,
                                const Eigen::VectorXd& gbest_x, double K,
                                double c1, double c2, RandomStream& rng);

/// Wrap a memory candidate as a particle with zero velocity and
/// pbest = own position.
Particle wrap_particle(const Candidate& c);

/// One swarm generation over survivors plus memory injections: recompute
/// gbest from the assembled swarm, update velocity and position of every
/// particle, evaluate, refresh pbest, and return the eta best by current
/// fitness with their state intact.
std::vector<Particle> pso_generation(const std::vector<Particle>& survivors,
                                     const std::vector<Candidate>& injected,
                                     const FitnessFunction& fitness,
                                     const PSOConfig& cfg, RandomStream& rng,
                                     std::vector<double>* eval_log = nullptr);

}  // namespace pesa
