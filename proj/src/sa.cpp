#include "pesa/sa.hpp"

#include <cmath>
#include <stdexcept>

namespace pesa {

SAChain SAChain::start(const Candidate& init, long total_steps) {
  SAChain c;
  c.x_prev = init.x;
  c.e_prev = init.y;
  c.best_x = init.x;
  c.best_y = init.y;
  c.step_count = 0;
  c.total_steps = total_steps;
  return c;
}

double temperature(long step, long total_steps, const SAConfig& cfg) {
  if (step < 1 || step > total_steps)
    throw std::invalid_argument("temperature: step out of [1, N_steps]");
  if (!(cfg.t_max > cfg.t_min) || !(cfg.t_min > 0.0))
    throw std::invalid_argument("temperature: requires t_max > t_min > 0");
  const double ratio = static_cast<double>(step) / static_cast<double>(total_steps);
  return cfg.t_max * std::exp(-std::log(cfg.t_max / cfg.t_min) * ratio);
}

Eigen::VectorXd random_walk(const Eigen::VectorXd& x, double chi,
                            double step_scale, const SearchSpace& space,
                            RandomStream& rng) {
  const Eigen::Index n = x.size();
  const Eigen::VectorXd range = space.range();
  Eigen::VectorXd out = x;
  bool fired = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rng.uniform() < chi) {
      out[i] += step_scale * range[i] * rng.normal();
      fired = true;
    }
  }
  if (!fired) {
    // proposal must differ from the current state
    const Eigen::Index i =
        static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::size_t>(n)));
    out[i] += step_scale * range[i] * rng.normal();
  }
  return clip_to_bounds(out, space);
}

bool metropolis_accept(double delta_e, double temp, RandomStream& rng) {
  if (temp <= 0.0) throw std::invalid_argument("metropolis_accept: temp <= 0");
  if (delta_e < 0.0) return true;
  return std::exp(-delta_e / temp) > rng.uniform();
}

SAGenerationResult sa_generation(SAChain& chain, const Candidate* theta_init,
                                 const Candidate* memory_best,
                                 const FitnessFunction& fitness,
                                 const SAConfig& cfg, RandomStream& rng) {
  if (chain.step_count + cfg.chain_size > chain.total_steps)
    throw std::runtime_error("sa_generation: annealing budget exhausted");

  if (theta_init) {
    chain.x_prev = theta_init->x;
    chain.e_prev = theta_init->y;
  }

  Candidate gen_best{chain.x_prev, chain.e_prev};
  SAGenerationResult result;

  for (int s = 0; s < cfg.chain_size; ++s) {
    ++chain.step_count;
    const double temp = temperature(chain.step_count, chain.total_steps, cfg);

    Eigen::VectorXd x;
    double e;
    bool backdoor = false;
    if (cfg.alpha_backdoor > 0.0 && memory_best != nullptr)
      backdoor = rng.uniform() < cfg.alpha_backdoor;

    if (backdoor) {
      // greedy replay: reuse the stored fitness, no fresh evaluation
      x = memory_best->x;
      e = memory_best->y;
    } else {
      x = random_walk(chain.x_prev, cfg.chi, cfg.step_scale, fitness.space(), rng);
      e = fitness.evaluate(x, rng);
      ++result.evaluations;
    }

    result.state_y.push_back(e);
    if (e < gen_best.y) gen_best = Candidate{x, e};

    const double delta_e = e - chain.e_prev;
    if (metropolis_accept(delta_e, temp, rng)) {
      chain.x_prev = x;
      chain.e_prev = e;
    }
  }

  if (gen_best.y < chain.best_y) {
    chain.best_x = gen_best.x;
    chain.best_y = gen_best.y;
  }

  result.last = Candidate{chain.x_prev, chain.e_prev};
  result.best = gen_best;
  return result;
}

}  // namespace pesa
