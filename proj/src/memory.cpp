#include "pesa/memory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pesa {

ReplayMemory::ReplayMemory(MemoryConfig cfg)
    : cfg_(cfg), alpha_(cfg.alpha_init) {
  if (cfg_.alpha_init > cfg_.alpha_end)
    throw std::invalid_argument("ReplayMemory: alpha_init > alpha_end");
  if (cfg_.dedup_tol < 0.0)
    throw std::invalid_argument("ReplayMemory: negative dedup_tol");
}

bool ReplayMemory::is_duplicate(const Eigen::VectorXd& x) const {
  for (const Entry& e : entries_) {
    if (e.c.x.size() != x.size()) continue;
    bool close = true;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (std::abs(e.c.x[i] - x[i]) > cfg_.dedup_tol) {
        close = false;
        break;
      }
    }
    if (close) return true;
  }
  return false;
}

void ReplayMemory::update(const std::vector<Candidate>& fresh) {
  for (const Candidate& c : fresh) {
    if (!std::isfinite(c.y))
      throw std::invalid_argument("ReplayMemory::update: unevaluated candidate");
    if (is_duplicate(c.x)) continue;
    entries_.push_back(Entry{c, next_seq_++});
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.c.y != b.c.y) return a.c.y < b.c.y;
    return a.seq < b.seq;
  });
  if (cfg_.capacity_max > 0 && entries_.size() > cfg_.capacity_max)
    entries_.resize(cfg_.capacity_max);
}

void ReplayMemory::require_nonempty() const {
  if (entries_.empty()) throw std::runtime_error("ReplayMemory: empty memory");
}

std::vector<double> ReplayMemory::priorities() const {
  require_nonempty();
  std::vector<double> p(entries_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::pow(1.0 / static_cast<double>(i + 1), alpha_);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

std::vector<Candidate> ReplayMemory::sample_prioritized(std::size_t count,
                                                        RandomStream& rng) const {
  require_nonempty();
  const std::size_t n = entries_.size();
  std::vector<Candidate> out;
  if (count >= n) {
    out.reserve(n);
    for (const Entry& e : entries_) out.push_back(e.c);
    return out;
  }
  // Without replacement: zero the drawn weight and renormalize implicitly.
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(1.0 / static_cast<double>(i + 1), alpha_);
    total += w[i];
  }
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    double u = rng.uniform() * total;
    std::size_t pick = n - 1;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] <= 0.0) continue;
      acc += w[i];
      if (u < acc) {
        pick = i;
        break;
      }
    }
    out.push_back(entries_[pick].c);
    total -= w[pick];
    w[pick] = 0.0;
  }
  return out;
}

const Candidate& ReplayMemory::best() const {
  require_nonempty();
  return entries_.front().c;
}

void ReplayMemory::anneal_alpha(int generation, int n_gen) {
  if (n_gen < 2) {
    alpha_ = cfg_.alpha_end;
    return;
  }
  double t = static_cast<double>(generation - 1) / static_cast<double>(n_gen - 1);
  alpha_ = cfg_.alpha_init + (cfg_.alpha_end - cfg_.alpha_init) * t;
}

}  // namespace pesa
