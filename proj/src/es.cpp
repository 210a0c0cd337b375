#include "pesa/es.hpp"

#include <algorithm>
#include <cmath>

namespace pesa {

double ESConfig::resolved_tau(Eigen::Index n) const {
  return tau != 0.0 ? tau : 1.0 / std::sqrt(2.0 * std::sqrt(static_cast<double>(n)));
}

double ESConfig::resolved_tau_prime(Eigen::Index n) const {
  return tau_prime != 0.0 ? tau_prime : 1.0 / std::sqrt(2.0 * static_cast<double>(n));
}

double ESConfig::resolved_strategy_min(Eigen::Index n) const {
  return strategy_min != 0.0 ? strategy_min : 1.0 / static_cast<double>(n);
}

ESIndividual mutate(const ESIndividual& ind, const SearchSpace& space,
                    const ESConfig& cfg, RandomStream& rng) {
  const Eigen::Index n = ind.x.size();
  const double tau = cfg.resolved_tau(n);
  const double tau_p = cfg.resolved_tau_prime(n);
  const double smin = cfg.resolved_strategy_min(n);
  const double smax = cfg.strategy_max;

  ESIndividual out;
  out.x = ind.x;
  out.strategy = ind.strategy;

  const double g = rng.normal();  // shared per individual
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = out.strategy[i] * std::exp(tau_p * g + tau * rng.normal());
    out.strategy[i] = std::clamp(s, smin, smax);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    out.x[i] += out.strategy[i] * rng.normal();
  out.x = clip_to_bounds(out.x, space);
  return out;  // fitness left unset (stale)
}

std::pair<ESIndividual, ESIndividual> crossover(const ESIndividual& a,
                                                const ESIndividual& b,
                                                RandomStream& rng) {
  const Eigen::Index n = a.x.size();
  if (b.x.size() != n)
    throw std::invalid_argument("crossover: dimension mismatch");

  Eigen::Index p1, p2;
  if (n < 3) {
    // single valid cut
    p1 = 0;
    p2 = n >= 2 ? 1 : 0;
  } else {
    // 1 <= p1 < p2 <= n-1
    p1 = static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::size_t>(n - 2))) + 1;
    p2 = static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::size_t>(n - 1 - p1))) + p1 + 1;
  }

  ESIndividual c1{a.x, a.strategy, std::nullopt};
  ESIndividual c2{b.x, b.strategy, std::nullopt};
  for (Eigen::Index i = p1; i < p2; ++i) {
    std::swap(c1.x[i], c2.x[i]);
    std::swap(c1.strategy[i], c2.strategy[i]);
  }
  return {std::move(c1), std::move(c2)};
}

ESIndividual wrap_candidate(const Candidate& c, const SearchSpace& space,
                            const ESConfig& cfg, RandomStream& rng) {
  const Eigen::Index n = space.dim();
  const double smin = cfg.resolved_strategy_min(n);
  ESIndividual ind;
  ind.x = c.x;
  ind.strategy.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    ind.strategy[i] = rng.uniform(smin, cfg.strategy_max);
  ind.fitness = c.y;
  return ind;
}

std::vector<ESIndividual> generate_offspring(
    const std::vector<ESIndividual>& parents, const SearchSpace& space,
    const ESConfig& cfg, RandomStream& rng) {
  if (parents.empty())
    throw std::invalid_argument("generate_offspring: no parents");
  std::vector<ESIndividual> offspring;
  offspring.reserve(static_cast<std::size_t>(cfg.lambda));
  for (int k = 0; k < cfg.lambda; ++k) {
    const double u = rng.uniform();
    if (u < cfg.cx_prob && parents.size() >= 2) {
      std::size_t i = rng.uniform_index(parents.size());
      std::size_t j = rng.uniform_index(parents.size() - 1);
      if (j >= i) ++j;
      auto [child, _] = crossover(parents[i], parents[j], rng);
      offspring.push_back(std::move(child));
    } else if (u < cfg.cx_prob + cfg.mut_prob) {
      std::size_t i = rng.uniform_index(parents.size());
      offspring.push_back(mutate(parents[i], space, cfg, rng));
    } else {
      offspring.push_back(parents[rng.uniform_index(parents.size())]);
    }
  }
  return offspring;
}

std::vector<ESIndividual> es_generation(
    const std::vector<ESIndividual>& survivors,
    const std::vector<Candidate>& injected, const FitnessFunction& fitness,
    const ESConfig& cfg, RandomStream& rng, std::vector<double>* eval_log) {
  std::vector<ESIndividual> parents = survivors;
  for (const Candidate& c : injected)
    parents.push_back(wrap_candidate(c, fitness.space(), cfg, rng));

  std::vector<ESIndividual> offspring =
      generate_offspring(parents, fitness.space(), cfg, rng);
  for (ESIndividual& o : offspring) {
    o.fitness = fitness.evaluate(o.x, rng);
    if (eval_log) eval_log->push_back(*o.fitness);
  }

  // comma selection: only offspring compete
  std::stable_sort(offspring.begin(), offspring.end(),
                   [](const ESIndividual& a, const ESIndividual& b) {
                     return a.y() < b.y();
                   });
  const std::size_t keep =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.mu), offspring.size());
  offspring.resize(keep);
  return offspring;
}

}  // namespace pesa
