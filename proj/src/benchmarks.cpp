#include "pesa/benchmarks.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace pesa {
namespace {

using std::numbers::pi;

double cigar(const Eigen::VectorXd& x) {
  // bent cigar: first component squared plus 1e6 times the rest
  return x[0] * x[0] + 1e6 * x.tail(x.size() - 1).squaredNorm();
}

double sphere(const Eigen::VectorXd& x) { return x.squaredNorm(); }

double ridge(const Eigen::VectorXd& x) {
  return x[0] + std::sqrt(x.tail(x.size() - 1).squaredNorm());
}

double ackley(const Eigen::VectorXd& x) {
  const double n = static_cast<double>(x.size());
  const double s1 = x.squaredNorm() / n;
  const double s2 = (2.0 * pi * x.array()).cos().sum() / n;
  return 20.0 - 20.0 * std::exp(-0.2 * std::sqrt(s1)) - std::exp(s2) +
         std::numbers::e;
}

double bohachevsky(const Eigen::VectorXd& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    f += x[i] * x[i] + 2.0 * x[i + 1] * x[i + 1] -
         0.3 * std::cos(3.0 * pi * x[i]) - 0.4 * std::cos(4.0 * pi * x[i + 1]) +
         0.7;
  }
  return f;
}

double griewank(const Eigen::VectorXd& x) {
  double prod = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  return x.squaredNorm() / 4000.0 - prod + 1.0;
}

double brown(const Eigen::VectorXd& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i] * x[i];
    const double b = x[i + 1] * x[i + 1];
    f += std::pow(a, b + 1.0) + std::pow(b, a + 1.0);
  }
  return f;
}

double exponential_fn(const Eigen::VectorXd& x) {
  return -std::exp(-0.5 * x.squaredNorm());
}

double zakharov(const Eigen::VectorXd& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    s += 0.5 * static_cast<double>(i + 1) * x[i];
  return x.squaredNorm() + s * s + s * s * s * s;
}

double salomon(const Eigen::VectorXd& x) {
  const double r = std::sqrt(x.squaredNorm());
  return 1.0 - std::cos(2.0 * pi * r) + 0.1 * r;
}

double quartic_base(const Eigen::VectorXd& x) {
  double f = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    f += static_cast<double>(i + 1) * std::pow(x[i], 4);
  return f;
}

double levy(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  auto w = [&](Eigen::Index i) { return 1.0 + (x[i] - 1.0) / 4.0; };
  double f = std::pow(std::sin(pi * w(0)), 2);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double wi = w(i);
    f += (wi - 1.0) * (wi - 1.0) *
         (1.0 + 10.0 * std::pow(std::sin(pi * wi + 1.0), 2));
  }
  const double wn = w(n - 1);
  f += (wn - 1.0) * (wn - 1.0) * (1.0 + std::pow(std::sin(2.0 * pi * wn), 2));
  return f;
}

struct Row {
  const char* name;
  double lo, hi;
  double (*fn)(const Eigen::VectorXd&);
  bool noisy;
  // optimum: constant-vector value, plus per-row override below
  double opt_fill;
  double opt_y;
};

constexpr Row kRows[] = {
    {"cigar", -10.0, 10.0, cigar, false, 0.0, 0.0},
    {"sphere", -100.0, 100.0, sphere, false, 0.0, 0.0},
    {"ridge", -5.0, 5.0, ridge, false, 0.0, -5.0},
    {"ackley", -32.0, 32.0, ackley, false, 0.0, 0.0},
    {"bohachevsky", -100.0, 100.0, bohachevsky, false, 0.0, 0.0},
    {"griewank", -600.0, 600.0, griewank, false, 0.0, 0.0},
    {"brown", -1.0, 4.0, brown, false, 0.0, 0.0},
    {"exponential", -1.0, 1.0, exponential_fn, false, 0.0, -1.0},
    {"zakharov", -5.0, 10.0, zakharov, false, 0.0, 0.0},
    {"salomon", -100.0, 100.0, salomon, false, 0.0, 0.0},
    {"quartic", -1.28, 1.28, quartic_base, true, 0.0, 0.0},
    {"levy", -10.0, 10.0, levy, false, 1.0, 0.0},
};

const Row& find_row(const std::string& name) {
  for (const Row& r : kRows)
    if (name == r.name) return r;
  throw std::out_of_range("unknown benchmark: " + name);
}

Eigen::VectorXd optimum_of(const Row& r, Eigen::Index n) {
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, r.opt_fill);
  if (std::string_view(r.name) == "ridge") x[0] = -5.0;
  return x;
}

class Benchmark final : public FitnessFunction {
 public:
  Benchmark(const Row& row, Eigen::Index n)
      : FitnessFunction(SearchSpace::box(n, row.lo, row.hi)), row_(row) {}

  double evaluate(const Eigen::VectorXd& x, RandomStream& rng) const override {
    if (x.size() != space().dim())
      throw std::invalid_argument("benchmark: dimension mismatch");
    double f = row_.fn(x);
    if (row_.noisy) f += rng.uniform();
    return f;
  }

 private:
  const Row& row_;
};

}  // namespace

std::unique_ptr<FitnessFunction> make_benchmark(const std::string& name,
                                                Eigen::Index n) {
  return std::make_unique<Benchmark>(find_row(name), n);
}

BenchmarkSpec benchmark_spec(const std::string& name, Eigen::Index n) {
  const Row& r = find_row(name);
  return BenchmarkSpec{r.name, SearchSpace::box(n, r.lo, r.hi),
                       optimum_of(r, n), r.opt_y, r.noisy};
}

std::vector<BenchmarkSpec> list_benchmarks(Eigen::Index n) {
  std::vector<BenchmarkSpec> out;
  for (const Row& r : kRows) out.push_back(benchmark_spec(r.name, n));
  return out;
}

std::vector<std::string> benchmark_names() {
  std::vector<std::string> out;
  for (const Row& r : kRows) out.emplace_back(r.name);
  return out;
}

}  // namespace pesa
