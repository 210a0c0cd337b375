#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>

#include "pesa/rng.hpp"

namespace pesa {

/// Box-constrained search space.
struct SearchSpace {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  SearchSpace(Eigen::VectorXd lo, Eigen::VectorXd hi)
      : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() < 1 || lower.size() != upper.size())
      throw std::invalid_argument("SearchSpace: bad dimensions");
    for (Eigen::Index i = 0; i < lower.size(); ++i)
      if (!(lower[i] < upper[i]))
        throw std::invalid_argument("SearchSpace: lower must be < upper");
  }

  static SearchSpace box(Eigen::Index n, double lo, double hi) {
    return SearchSpace(Eigen::VectorXd::Constant(n, lo),
                       Eigen::VectorXd::Constant(n, hi));
  }

  Eigen::Index dim() const { return lower.size(); }
  Eigen::VectorXd range() const { return upper - lower; }

  bool contains(const Eigen::VectorXd& x) const {
    return x.size() == dim() && (x.array() >= lower.array()).all() &&
           (x.array() <= upper.array()).all();
  }
};

/// A solution vector with its fitness (minimization).
struct Candidate {
  Eigen::VectorXd x;
  double y = 0.0;
};

/// Objective to minimize over a box. Noisy objectives draw from the
/// caller-supplied stream so seeded runs stay reproducible.
class FitnessFunction {
 public:
  explicit FitnessFunction(SearchSpace space) : space_(std::move(space)) {}
  virtual ~FitnessFunction() = default;

  const SearchSpace& space() const { return space_; }
  virtual double evaluate(const Eigen::VectorXd& x, RandomStream& rng) const = 0;

 private:
  SearchSpace space_;
};

inline Eigen::VectorXd clip_to_bounds(const Eigen::VectorXd& x,
                                      const SearchSpace& space) {
  if (x.size() != space.dim())
    throw std::invalid_argument("clip_to_bounds: dimension mismatch");
  return x.cwiseMax(space.lower).cwiseMin(space.upper);
}

inline Eigen::VectorXd uniform_sample(const SearchSpace& space,
                                      RandomStream& rng) {
  Eigen::VectorXd x(space.dim());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    x[i] = space.lower[i] + rng.uniform() * (space.upper[i] - space.lower[i]);
  return x;
}

}  // namespace pesa
