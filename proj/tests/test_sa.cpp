#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pesa/benchmarks.hpp"
#include "pesa/sa.hpp"

using namespace pesa;

TEST_CASE("fast annealing schedule endpoints and midpoint") {
  SAConfig cfg;  // T_max=1e4, T_min=1
  const long n_steps = 6000;
  CHECK(temperature(n_steps, n_steps, cfg) ==
        doctest::Approx(cfg.t_min).epsilon(1e-9));
  CHECK(temperature(3000, n_steps, cfg) == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(temperature(1, n_steps, cfg) > 0.99 * cfg.t_max);
  CHECK_THROWS(temperature(0, n_steps, cfg));
  CHECK_THROWS(temperature(n_steps + 1, n_steps, cfg));
}

TEST_CASE("temperature is strictly decreasing") {
  SAConfig cfg;
  double prev = cfg.t_max + 1.0;
  for (long n = 1; n <= 500; ++n) {
    const double t = temperature(n, 500, cfg);
    CHECK(t < prev);
    prev = t;
  }
  CHECK(prev == doctest::Approx(cfg.t_min).epsilon(1e-9));
}

TEST_CASE("random walk: chi=0 perturbs exactly one attribute") {
  const SearchSpace space = SearchSpace::box(20, -1.0, 1.0);
  RandomStream rng(3);
  const Eigen::VectorXd x = Eigen::VectorXd::Zero(20);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::VectorXd out = random_walk(x, 0.0, 0.05, space, rng);
    int changed = 0;
    for (int i = 0; i < 20; ++i)
      if (out[i] != x[i]) ++changed;
    CHECK(changed == 1);
  }
}

TEST_CASE("random walk: chi=1 perturbs all attributes") {
  const SearchSpace space = SearchSpace::box(20, -10.0, 10.0);
  RandomStream rng(5);
  const Eigen::VectorXd x = Eigen::VectorXd::Zero(20);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::VectorXd out = random_walk(x, 1.0, 0.05, space, rng);
    for (int i = 0; i < 20; ++i) CHECK(out[i] != x[i]);
  }
}

TEST_CASE("random walk perturbation rate matches chi") {
  const SearchSpace space = SearchSpace::box(50, -10.0, 10.0);
  RandomStream rng(8);
  const Eigen::VectorXd x = Eigen::VectorXd::Zero(50);
  long changed = 0;
  const int trials = 100000;
  for (int trial = 0; trial < trials; ++trial) {
    const Eigen::VectorXd out = random_walk(x, 0.1, 0.01, space, rng);
    for (int i = 0; i < 50; ++i)
      if (out[i] != x[i]) ++changed;
  }
  const double frac = double(changed) / (50.0 * trials);
  CHECK(std::abs(frac - 0.1) < 0.005);
}

TEST_CASE("random walk stays in bounds") {
  const SearchSpace space = SearchSpace::box(5, -1.0, 1.0);
  RandomStream rng(9);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(5, 0.99);
  for (int trial = 0; trial < 500; ++trial) {
    x = random_walk(x, 0.5, 0.5, space, rng);
    CHECK(space.contains(x));
  }
}

TEST_CASE("metropolis acceptance rule") {
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) {
    CHECK(metropolis_accept(-1.0, 10.0, rng));
    CHECK(metropolis_accept(0.0, 10.0, rng));  // exp(0)=1 > rand a.s.
  }
  CHECK_THROWS(metropolis_accept(1.0, 0.0, rng));
}

TEST_CASE("metropolis acceptance frequency at dE=1, T=1") {
  RandomStream rng(2);
  int accepted = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i)
    if (metropolis_accept(1.0, 1.0, rng)) ++accepted;
  CHECK(std::abs(double(accepted) / trials - std::exp(-1.0)) < 0.01);
}

TEST_CASE("metropolis frequencies across a (dE, T) grid") {
  RandomStream rng(4);
  const int trials = 100000;
  for (double de : {-0.5, 0.2, 1.0, 3.0}) {
    for (double t : {0.5, 1.0, 5.0}) {
      int accepted = 0;
      for (int i = 0; i < trials; ++i)
        if (metropolis_accept(de, t, rng)) ++accepted;
      const double expected = std::min(1.0, std::exp(-de / t));
      CHECK(std::abs(double(accepted) / trials - expected) < 0.01);
    }
  }
}

TEST_CASE("degenerate backdoor: chain pinned to the memory best") {
  auto fitness = make_benchmark("sphere", 3);
  SAConfig cfg;
  cfg.alpha_backdoor = 1.0;
  cfg.chain_size = 30;
  const Candidate init{Eigen::VectorXd::Constant(3, 1.0), 3.0};
  SAChain chain = SAChain::start(init, 1000);
  RandomStream rng(6);
  SAGenerationResult res =
      sa_generation(chain, &init, &init, *fitness, cfg, rng);
  CHECK(res.last.x == init.x);
  CHECK(res.last.y == init.y);
  CHECK(res.best.x == init.x);
  CHECK(res.evaluations == 0);
}

TEST_CASE("backdoor event frequency matches alpha_backdoor") {
  auto fitness = make_benchmark("sphere", 4);
  SAConfig cfg;
  cfg.alpha_backdoor = 0.1;
  cfg.chain_size = 1000;
  const Candidate init{Eigen::VectorXd::Zero(4), 0.0};
  const Candidate best{Eigen::VectorXd::Zero(4), 0.0};
  RandomStream rng(7);
  long backdoor_steps = 0, total = 0;
  for (int rep = 0; rep < 100; ++rep) {
    SAChain chain = SAChain::start(init, 100000000);
    SAGenerationResult res =
        sa_generation(chain, &init, &best, *fitness, cfg, rng);
    backdoor_steps += cfg.chain_size - res.evaluations;
    total += cfg.chain_size;
  }
  CHECK(std::abs(double(backdoor_steps) / double(total) - 0.1) < 0.005);
}

TEST_CASE("generation best bounds every evaluated state") {
  auto fitness = make_benchmark("ackley", 5);
  SAConfig cfg;
  cfg.chain_size = 60;
  RandomStream init_rng(11);
  Candidate init;
  init.x = uniform_sample(fitness->space(), init_rng);
  init.y = fitness->evaluate(init.x, init_rng);
  SAChain chain = SAChain::start(init, 6000);
  RandomStream rng(12);
  double running_best = init.y;
  for (int gen = 0; gen < 20; ++gen) {
    SAGenerationResult res =
        sa_generation(chain, nullptr, nullptr, *fitness, cfg, rng);
    for (double y : res.state_y) CHECK(res.best.y <= y);
    CHECK(fitness->space().contains(res.last.x));
    CHECK(fitness->space().contains(res.best.x));
    CHECK(chain.best_y <= running_best);
    running_best = chain.best_y;
  }
}

TEST_CASE("exhausted annealing budget rejected") {
  auto fitness = make_benchmark("sphere", 2);
  SAConfig cfg;
  cfg.chain_size = 60;
  const Candidate init{Eigen::VectorXd::Zero(2), 0.0};
  SAChain chain = SAChain::start(init, 100);  // < two generations
  RandomStream rng(13);
  sa_generation(chain, &init, nullptr, *fitness, cfg, rng);
  CHECK_THROWS(sa_generation(chain, &init, nullptr, *fitness, cfg, rng));
}
