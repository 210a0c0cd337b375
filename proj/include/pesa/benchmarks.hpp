#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pesa/core.hpp"

namespace pesa {

struct BenchmarkSpec {
  std::string name;
  SearchSpace space;
  Eigen::VectorXd optimum_x;
  double optimum_y;
  bool noisy;
};

/// Build one of the named n-dimensional benchmark functions. Names
/// (lowercase): cigar, sphere, ridge, ackley, bohachevsky, griewank,
/// brown, exponential, zakharov, salomon, quartic, levy.
/// Throws std::out_of_range on an unknown name.
std::unique_ptr<FitnessFunction> make_benchmark(const std::string& name,
                                                Eigen::Index n);

BenchmarkSpec benchmark_spec(const std::string& name, Eigen::Index n);

/// All 12 specs in table order.
std::vector<BenchmarkSpec> list_benchmarks(Eigen::Index n);

std::vector<std::string> benchmark_names();

}  // namespace pesa
