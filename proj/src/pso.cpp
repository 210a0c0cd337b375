#include "pesa/pso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pesa {

double constriction(double c1, double c2) {
  const double phi = c1 + c2;
  if (phi <= 4.0)
    throw std::domain_error("constriction: requires c1 + c2 > 4");
  return 2.0 / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
}

Eigen::VectorXd velocity_update_with(const Particle& p,
                                     const Eigen::VectorXd& gbest_x, double K,
                                     double c1, double c2,
                                     const Eigen::VectorXd& r1,
                                     const Eigen::VectorXd& r2) {
  return K * (p.velocity.array() +
              c1 * r1.array() * (p.pbest_x - p.x).array() +
              c2 * r2.array() * (gbest_x - p.x).array())
             .matrix();
}

Eigen::VectorXd velocity_update(const Particle& p,
                                const Eigen::VectorXd& gbest_x, double K,
                                double c1, double c2, RandomStream& rng) {
  const Eigen::Index n = p.x.size();
  if (gbest_x.size() != n)
    throw std::invalid_argument("velocity_update: dimension mismatch");
  Eigen::VectorXd r1(n), r2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    r1[i] = rng.uniform();
    r2[i] = rng.uniform();
  }
  return velocity_update_with(p, gbest_x, K, c1, c2, r1, r2);
}

Particle wrap_particle(const Candidate& c) {
  Particle p;
  p.x = c.x;
  p.y = c.y;
  p.velocity = Eigen::VectorXd::Zero(c.x.size());
  p.pbest_x = c.x;
  p.pbest_y = c.y;
  return p;
}

std::vector<Particle> pso_generation(const std::vector<Particle>& survivors,
                                     const std::vector<Candidate>& injected,
                                     const FitnessFunction& fitness,
                                     const PSOConfig& cfg, RandomStream& rng,
                                     std::vector<double>* eval_log) {
  std::vector<Particle> swarm = survivors;
  for (const Candidate& c : injected) swarm.push_back(wrap_particle(c));
  if (swarm.empty())
    throw std::invalid_argument("pso_generation: empty swarm");

  // gbest from pbest across the assembled swarm
  const Particle* leader = &swarm.front();
  for (const Particle& p : swarm)
    if (p.pbest_y < leader->pbest_y) leader = &p;
  const Eigen::VectorXd gbest_x = leader->pbest_x;

  const double K = constriction(cfg.c1, cfg.c2);
  for (Particle& p : swarm) {
    p.velocity = velocity_update(p, gbest_x, K, cfg.c1, cfg.c2, rng);
    p.x = clip_to_bounds(p.x + p.velocity, fitness.space());
    p.y = fitness.evaluate(p.x, rng);
    if (eval_log) eval_log->push_back(p.y);
    if (p.y < p.pbest_y) {
      p.pbest_y = p.y;
      p.pbest_x = p.x;
    }
  }

  std::stable_sort(swarm.begin(), swarm.end(),
                   [](const Particle& a, const Particle& b) { return a.y < b.y; });
  const std::size_t keep =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.eta), swarm.size());
  swarm.resize(keep);
  return swarm;
}

}  // namespace pesa
