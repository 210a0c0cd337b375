#include "pesa/pesa.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace pesa {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Stats {
  double mean = kNaN;
  double stddev = kNaN;
};

Stats stats_of(const std::vector<double>& ys) {
  if (ys.empty()) return {};
  double mean = 0.0;
  for (double y : ys) mean += y;
  mean /= static_cast<double>(ys.size());
  double var = 0.0;
  for (double y : ys) var += (y - mean) * (y - mean);
  var /= static_cast<double>(ys.size());
  return {mean, std::sqrt(var)};
}

std::vector<Candidate> sorted_pool(std::vector<Candidate> pool) {
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Candidate& a, const Candidate& b) { return a.y < b.y; });
  return pool;
}

std::vector<ESIndividual> init_es_population(const std::vector<Candidate>& pool,
                                             const SearchSpace& space,
                                             const ESConfig& cfg,
                                             RandomStream& rng) {
  std::vector<ESIndividual> pop;
  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.mu), pool.size());
  for (std::size_t i = 0; i < take; ++i)
    pop.push_back(wrap_candidate(pool[i], space, cfg, rng));
  return pop;
}

std::vector<Particle> init_swarm(const std::vector<Candidate>& pool,
                                 const PSOConfig& cfg) {
  std::vector<Particle> swarm;
  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.eta), pool.size());
  for (std::size_t i = 0; i < take; ++i) swarm.push_back(wrap_particle(pool[i]));
  return swarm;
}

template <typename F>
auto with_context(const char* who, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(who) + ": " + e.what());
  }
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::pesa: return "pesa";
    case Algorithm::es: return "es";
    case Algorithm::pso: return "pso";
    case Algorithm::sa: return "sa";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "pesa") return Algorithm::pesa;
  if (s == "es") return Algorithm::es;
  if (s == "pso") return Algorithm::pso;
  if (s == "sa") return Algorithm::sa;
  throw std::out_of_range("unknown algorithm: " + s);
}

ReplayMemory warmup(const PESAConfig& cfg, const FitnessFunction& fitness,
                    RandomStream& warmup_rng, std::vector<Candidate>* pool_out) {
  if (cfg.n_warmup < 1)
    throw std::invalid_argument("warmup: n_warmup must be >= 1");
  ReplayMemory memory(cfg.memory);
  std::vector<Candidate> pool;
  pool.reserve(static_cast<std::size_t>(cfg.n_warmup));
  for (int i = 0; i < cfg.n_warmup; ++i) {
    Candidate c;
    c.x = uniform_sample(fitness.space(), warmup_rng);
    c.y = fitness.evaluate(c.x, warmup_rng);
    pool.push_back(std::move(c));
  }
  memory.update(pool);
  if (pool_out) *pool_out = std::move(pool);
  return memory;
}

PesaState pesa_init(const PESAConfig& cfg, const FitnessFunction& fitness) {
  RandomStream master(cfg.seed);
  RandomStream warmup_rng = master.substream("warmup");

  std::vector<Candidate> pool;
  ReplayMemory memory = warmup(cfg, fitness, warmup_rng, &pool);
  pool = sorted_pool(std::move(pool));

  PesaState state{cfg,
                  std::move(memory),
                  {},
                  {},
                  {},
                  master.substream("es"),
                  master.substream("pso"),
                  master.substream("sa"),
                  master.substream("memory")};
  state.es_pop = init_es_population(pool, fitness.space(), cfg.es, state.es_rng);
  state.swarm = init_swarm(pool, cfg.pso);
  state.chain = SAChain::start(pool.front(),
                               static_cast<long>(cfg.n_gen) * cfg.sa.chain_size);
  state.evals = cfg.n_warmup;
  return state;
}

GenerationRecord pesa_generation(PesaState& state,
                                 const FitnessFunction& fitness) {
  const PESAConfig& cfg = state.cfg;
  const int k = ++state.generation;
  state.memory.anneal_alpha(k, cfg.n_gen);

  // prioritized draws from the generation-start snapshot
  const std::vector<Candidate> mu_inj = state.memory.sample_prioritized(
      static_cast<std::size_t>(cfg.es.mu_replay), state.mem_rng);
  const std::vector<Candidate> eta_inj = state.memory.sample_prioritized(
      static_cast<std::size_t>(cfg.pso.eta_replay), state.mem_rng);
  const Candidate theta = state.memory.sample_prioritized(1, state.mem_rng).front();
  const Candidate mem_best = state.memory.best();

  std::vector<ESIndividual> es_new;
  std::vector<Particle> swarm_new;
  SAGenerationResult sa_res;
  std::vector<double> es_log, pso_log;

  auto es_task = [&] {
    return with_context("es", [&] {
      return es_generation(state.es_pop, mu_inj, fitness, cfg.es, state.es_rng,
                           &es_log);
    });
  };
  auto pso_task = [&] {
    return with_context("pso", [&] {
      return pso_generation(state.swarm, eta_inj, fitness, cfg.pso,
                            state.pso_rng, &pso_log);
    });
  };
  auto sa_task = [&] {
    return with_context("sa", [&] {
      return sa_generation(state.chain, &theta, &mem_best, fitness, cfg.sa,
                           state.sa_rng);
    });
  };

  if (cfg.parallel) {
    auto es_future = std::async(std::launch::async, es_task);
    auto pso_future = std::async(std::launch::async, pso_task);
    sa_res = sa_task();
    es_new = es_future.get();
    swarm_new = pso_future.get();
  } else {
    es_new = es_task();
    swarm_new = pso_task();
    sa_res = sa_task();
  }

  // memory management: survivors mu, eta, theta_last, theta_best
  std::vector<Candidate> fresh;
  fresh.reserve(es_new.size() + swarm_new.size() + 2);
  for (const ESIndividual& i : es_new) fresh.push_back(Candidate{i.x, i.y()});
  for (const Particle& p : swarm_new) fresh.push_back(Candidate{p.x, p.y});
  fresh.push_back(sa_res.last);
  fresh.push_back(sa_res.best);
  state.memory.update(fresh);

  state.evals += static_cast<long>(es_log.size()) +
                 static_cast<long>(pso_log.size()) + sa_res.evaluations;

  GenerationRecord rec;
  rec.generation = k;
  rec.es_best = es_new.front().y();
  rec.pso_best = swarm_new.front().y;
  rec.sa_best = sa_res.best.y;
  rec.gen_min = std::min({rec.es_best, rec.pso_best, rec.sa_best});
  rec.best_so_far = state.memory.best().y;
  std::vector<double> all_y = es_log;
  all_y.insert(all_y.end(), pso_log.begin(), pso_log.end());
  all_y.insert(all_y.end(), sa_res.state_y.begin(), sa_res.state_y.end());
  const Stats st = stats_of(all_y);
  rec.mean = st.mean;
  rec.stddev = st.stddev;
  rec.evals_cumulative = state.evals;
  rec.alpha = state.memory.alpha();

  state.es_pop = std::move(es_new);
  state.swarm = std::move(swarm_new);
  return rec;
}

RunResult run_pesa(const PESAConfig& cfg, const FitnessFunction& fitness,
                   ReplayMemory* final_memory) {
  PesaState state = pesa_init(cfg, fitness);
  RunResult result;
  result.history.reserve(static_cast<std::size_t>(cfg.n_gen));
  for (int k = 0; k < cfg.n_gen; ++k)
    result.history.push_back(pesa_generation(state, fitness));
  result.best = state.memory.best();
  if (final_memory) *final_memory = state.memory;
  return result;
}

RunResult run_standalone(Algorithm algo, const PESAConfig& cfg,
                         const FitnessFunction& fitness) {
  if (algo == Algorithm::pesa) return run_pesa(cfg, fitness);

  RandomStream master(cfg.seed);
  RandomStream warmup_rng = master.substream("warmup");
  std::vector<Candidate> pool;
  warmup(cfg, fitness, warmup_rng, &pool);  // memory discarded: decoupled mode
  pool = sorted_pool(std::move(pool));

  RunResult result;
  result.history.reserve(static_cast<std::size_t>(cfg.n_gen));
  long evals = cfg.n_warmup;
  double best_so_far = pool.front().y;
  Candidate best = pool.front();

  auto emit = [&](int k, double gen_min, const std::vector<double>& ys,
                  const Candidate& gen_best_c) {
    if (gen_best_c.y < best.y) best = gen_best_c;
    best_so_far = std::min(best_so_far, gen_min);
    GenerationRecord rec;
    rec.generation = k;
    rec.es_best = rec.pso_best = rec.sa_best = kNaN;
    rec.gen_min = gen_min;
    rec.best_so_far = best_so_far;
    const Stats st = stats_of(ys);
    rec.mean = st.mean;
    rec.stddev = st.stddev;
    rec.evals_cumulative = evals;
    rec.alpha = 0.0;
    result.history.push_back(rec);
  };

  switch (algo) {
    case Algorithm::es: {
      RandomStream rng = master.substream("es");
      std::vector<ESIndividual> pop =
          init_es_population(pool, fitness.space(), cfg.es, rng);
      for (int k = 1; k <= cfg.n_gen; ++k) {
        std::vector<double> log;
        pop = es_generation(pop, {}, fitness, cfg.es, rng, &log);
        evals += static_cast<long>(log.size());
        emit(k, pop.front().y(), log, Candidate{pop.front().x, pop.front().y()});
        result.history.back().es_best = pop.front().y();
      }
      break;
    }
    case Algorithm::pso: {
      RandomStream rng = master.substream("pso");
      std::vector<Particle> swarm = init_swarm(pool, cfg.pso);
      for (int k = 1; k <= cfg.n_gen; ++k) {
        std::vector<double> log;
        swarm = pso_generation(swarm, {}, fitness, cfg.pso, rng, &log);
        evals += static_cast<long>(log.size());
        emit(k, swarm.front().y, log,
             Candidate{swarm.front().x, swarm.front().y});
        result.history.back().pso_best = swarm.front().y;
      }
      break;
    }
    case Algorithm::sa: {
      RandomStream rng = master.substream("sa");
      SAConfig sa_cfg = cfg.sa;
      sa_cfg.alpha_backdoor = 0.0;  // no memory, no backdoor
      SAChain chain = SAChain::start(
          pool.front(), static_cast<long>(cfg.n_gen) * sa_cfg.chain_size);
      for (int k = 1; k <= cfg.n_gen; ++k) {
        // continuous chain: no per-generation reset
        SAGenerationResult res =
            sa_generation(chain, nullptr, nullptr, fitness, sa_cfg, rng);
        evals += res.evaluations;
        emit(k, res.best.y, res.state_y, res.best);
        result.history.back().sa_best = res.best.y;
      }
      break;
    }
    case Algorithm::pesa:
      break;  // handled above
  }

  result.best = best;
  return result;
}

}  // namespace pesa
