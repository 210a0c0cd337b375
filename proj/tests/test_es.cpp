#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pesa/benchmarks.hpp"
#include "pesa/es.hpp"

using namespace pesa;

namespace {

ESIndividual individual(const Eigen::VectorXd& x, double strategy_value) {
  ESIndividual ind;
  ind.x = x;
  ind.strategy = Eigen::VectorXd::Constant(x.size(), strategy_value);
  return ind;
}

}  // namespace

TEST_CASE("resolved learning rates and strategy bounds") {
  ESConfig cfg;
  CHECK(cfg.resolved_strategy_min(50) == doctest::Approx(0.02));
  CHECK(cfg.resolved_tau(50) == doctest::Approx(1.0 / std::sqrt(2.0 * std::sqrt(50.0))));
  CHECK(cfg.resolved_tau_prime(50) == doctest::Approx(1.0 / std::sqrt(100.0)));
}

TEST_CASE("mutation clamps strategy to its bounds") {
  const SearchSpace space = SearchSpace::box(10, -1.0, 1.0);
  ESConfig cfg;
  RandomStream rng(11);
  ESIndividual ind = individual(Eigen::VectorXd::Zero(10), cfg.strategy_max);
  const double smin = cfg.resolved_strategy_min(10);
  for (int i = 0; i < 200; ++i) {
    ind = mutate(ind, space, cfg, rng);
    CHECK(ind.strategy.minCoeff() >= smin);
    CHECK(ind.strategy.maxCoeff() <= cfg.strategy_max);
    CHECK(space.contains(ind.x));
    CHECK_THROWS(ind.y());  // stale after mutation
    ind.fitness = 0.0;
  }
}

TEST_CASE("zero learning rates leave the strategy unchanged") {
  const SearchSpace space = SearchSpace::box(6, -1.0, 1.0);
  ESConfig cfg;
  cfg.tau = -0.0;
  // tau==0 means "default", so use a vanishing rate instead
  cfg.tau = 1e-300;
  cfg.tau_prime = 1e-300;
  RandomStream rng(4);
  ESIndividual ind = individual(Eigen::VectorXd::Zero(6), 0.3);
  ESIndividual out = mutate(ind, space, cfg, rng);
  for (int i = 0; i < 6; ++i)
    CHECK(out.strategy[i] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("self-crossover is the identity") {
  RandomStream rng(8);
  ESIndividual a = individual(Eigen::VectorXd::LinSpaced(10, 0.0, 9.0), 0.1);
  auto [c1, c2] = crossover(a, a, rng);
  CHECK(c1.x == a.x);
  CHECK(c2.x == a.x);
  CHECK(c1.strategy == a.strategy);
  CHECK(!c1.fitness.has_value());
}

TEST_CASE("two-point crossover swaps a contiguous interior segment") {
  RandomStream rng(21);
  const int n = 8;
  ESIndividual a = individual(Eigen::VectorXd::Constant(n, 1.0), 0.1);
  ESIndividual b = individual(Eigen::VectorXd::Constant(n, 2.0), 0.2);
  for (int trial = 0; trial < 300; ++trial) {
    auto [c1, c2] = crossover(a, b, rng);
    // endpoints never swapped; pattern is a-prefix, b-segment, a-suffix
    CHECK(c1.x[0] == 1.0);
    CHECK(c1.x[n - 1] == 1.0);
    int transitions = 0;
    for (int i = 1; i < n; ++i)
      if (c1.x[i] != c1.x[i - 1]) ++transitions;
    CHECK(transitions == 2);  // exactly one swapped block
    // multiset conservation across the pair
    for (int i = 0; i < n; ++i) {
      CHECK(c1.x[i] + c2.x[i] == doctest::Approx(3.0));
      CHECK(c1.strategy[i] + c2.strategy[i] == doctest::Approx(0.3));
    }
  }
}

TEST_CASE("manual segment-swap oracle at n=4") {
  // enumerate outcomes: the only valid cuts are (1,2), (1,3), (2,3)
  RandomStream rng(99);
  ESIndividual a = individual(Eigen::VectorXd::LinSpaced(4, 0.0, 3.0), 0.1);
  ESIndividual b = individual(Eigen::VectorXd::LinSpaced(4, 10.0, 13.0), 0.2);
  std::set<std::vector<double>> seen;
  for (int trial = 0; trial < 200; ++trial) {
    auto [c1, c2] = crossover(a, b, rng);
    seen.insert({c1.x[0], c1.x[1], c1.x[2], c1.x[3]});
  }
  const std::set<std::vector<double>> expected = {
      {0.0, 11.0, 2.0, 3.0},   // cuts (1,2)
      {0.0, 11.0, 12.0, 3.0},  // cuts (1,3)
      {0.0, 1.0, 12.0, 3.0},   // cuts (2,3)
  };
  CHECK(seen == expected);
}

TEST_CASE("crossover falls back to one-point below n=3") {
  RandomStream rng(5);
  ESIndividual a = individual(Eigen::VectorXd::Constant(2, 1.0), 0.1);
  ESIndividual b = individual(Eigen::VectorXd::Constant(2, 2.0), 0.1);
  auto [c1, c2] = crossover(a, b, rng);
  CHECK(c1.x[0] == 2.0);
  CHECK(c1.x[1] == 1.0);
}

TEST_CASE("pure reproduction copies parents") {
  const SearchSpace space = SearchSpace::box(4, 0.0, 1.0);
  ESConfig cfg;
  cfg.cx_prob = 0.0;
  cfg.mut_prob = 0.0;
  cfg.lambda = 20;
  RandomStream rng(6);
  std::vector<ESIndividual> parents = {
      individual(Eigen::VectorXd::Constant(4, 0.25), 0.3),
      individual(Eigen::VectorXd::Constant(4, 0.75), 0.3)};
  for (const ESIndividual& o : generate_offspring(parents, space, cfg, rng)) {
    const double v = o.x[0];
    CHECK((v == 0.25 || v == 0.75));
    CHECK(o.x.maxCoeff() == o.x.minCoeff());
  }
}

TEST_CASE("forced crossover mixes both parents in every offspring") {
  const SearchSpace space = SearchSpace::box(6, 0.0, 1.0);
  ESConfig cfg;
  cfg.cx_prob = 1.0;
  cfg.mut_prob = 0.0;
  cfg.lambda = 50;
  RandomStream rng(7);
  std::vector<ESIndividual> parents = {
      individual(Eigen::VectorXd::Constant(6, 0.25), 0.3),
      individual(Eigen::VectorXd::Constant(6, 0.75), 0.3)};
  for (const ESIndividual& o : generate_offspring(parents, space, cfg, rng)) {
    bool has_a = false, has_b = false;
    for (int i = 0; i < 6; ++i) {
      if (o.x[i] == 0.25) has_a = true;
      if (o.x[i] == 0.75) has_b = true;
    }
    CHECK(has_a);
    CHECK(has_b);
  }
}

TEST_CASE("operator frequencies over a large offspring batch") {
  const SearchSpace space = SearchSpace::box(8, 0.0, 1.0);
  ESConfig cfg;
  cfg.cx_prob = 0.6;
  cfg.mut_prob = 0.15;
  cfg.lambda = 6000;
  RandomStream rng(12);
  std::vector<ESIndividual> parents = {
      individual(Eigen::VectorXd::Constant(8, 0.25), 0.3),
      individual(Eigen::VectorXd::Constant(8, 0.75), 0.3)};
  int cx = 0, mut = 0, rep = 0;
  for (const ESIndividual& o : generate_offspring(parents, space, cfg, rng)) {
    bool pure_a = true, pure_b = true, on_grid = true;
    for (int i = 0; i < 8; ++i) {
      if (o.x[i] != 0.25) pure_a = false;
      if (o.x[i] != 0.75) pure_b = false;
      if (o.x[i] != 0.25 && o.x[i] != 0.75) on_grid = false;
    }
    if (pure_a || pure_b)
      ++rep;
    else if (on_grid)
      ++cx;
    else
      ++mut;
  }
  CHECK(std::abs(cx / 6000.0 - 0.60) < 0.02);
  CHECK(std::abs(mut / 6000.0 - 0.15) < 0.02);
  CHECK(std::abs(rep / 6000.0 - 0.25) < 0.02);
}

TEST_CASE("empty parent list rejected") {
  const SearchSpace space = SearchSpace::box(4, 0.0, 1.0);
  RandomStream rng(1);
  CHECK_THROWS(generate_offspring({}, space, ESConfig{}, rng));
}

TEST_CASE("comma selection keeps only offspring") {
  auto fitness = make_benchmark("sphere", 3);
  ESConfig cfg;
  cfg.mu = 1;
  cfg.lambda = 1;
  cfg.cx_prob = 0.0;
  cfg.mut_prob = 1.0;
  RandomStream rng(42);
  // parent sits at the optimum; the single mutated offspring survives anyway
  ESIndividual parent = individual(Eigen::VectorXd::Zero(3), 0.1);
  parent.fitness = 0.0;
  std::vector<ESIndividual> next =
      es_generation({parent}, {}, *fitness, cfg, rng);
  REQUIRE(next.size() == 1);
  CHECK(next[0].y() > 0.0);
}

TEST_CASE("selection returns mu sorted survivors from the offspring") {
  auto fitness = make_benchmark("sphere", 5);
  ESConfig cfg;
  cfg.mu = 5;
  cfg.lambda = 20;
  RandomStream rng(3);
  std::vector<Candidate> injected;
  RandomStream init(1);
  for (int i = 0; i < 5; ++i) {
    Candidate c;
    c.x = uniform_sample(fitness->space(), init);
    c.y = fitness->evaluate(c.x, init);
    injected.push_back(c);
  }
  std::vector<double> log;
  std::vector<ESIndividual> next =
      es_generation({}, injected, *fitness, cfg, rng, &log);
  REQUIRE(next.size() == 5);
  CHECK(log.size() == 20);
  for (std::size_t i = 0; i + 1 < next.size(); ++i)
    CHECK(next[i].y() <= next[i + 1].y());
  // each survivor's fitness appears in the offspring log
  for (const ESIndividual& s : next)
    CHECK(std::count(log.begin(), log.end(), s.y()) >= 1);
}

TEST_CASE("smoke: ES improves on sphere most generations") {
  auto fitness = make_benchmark("sphere", 5);
  ESConfig cfg;
  cfg.mu = 5;
  cfg.lambda = 20;
  RandomStream rng(2);
  std::vector<ESIndividual> pop;
  RandomStream init(9);
  for (int i = 0; i < 5; ++i) {
    ESIndividual ind = individual(uniform_sample(fitness->space(), init), 0.3);
    ind.fitness = fitness->evaluate(ind.x, init);
    pop.push_back(ind);
  }
  double best = pop[0].y();
  int improved = 0;
  for (int gen = 0; gen < 30; ++gen) {
    pop = es_generation(pop, {}, *fitness, cfg, rng);
    if (pop[0].y() < best) {
      best = pop[0].y();
      ++improved;
    }
    const double smin = cfg.resolved_strategy_min(5);
    for (const ESIndividual& ind : pop) {
      CHECK(ind.strategy.minCoeff() >= smin);
      CHECK(ind.strategy.maxCoeff() <= cfg.strategy_max);
      CHECK(fitness->space().contains(ind.x));
    }
  }
  CHECK(improved >= 24);  // >= 80% of 30 generations
}
