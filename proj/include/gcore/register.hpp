#pragma once

#include <random>

#include "gcore/entangled.hpp"

// Exact pure-state tracking for one carrier unit.  The unit starts as
// D independent N-qudit entangled states; clusters merge only when a
// joint measurement spans several of them, and measured qudits are
// removed after collapse, so cluster dimensions stay small.

namespace gcore {

using Rng = std::mt19937_64;

struct QuditCluster {
  std::vector<int> particles;  // particle ids, tensor-order MSB first
  Vec amps;
};

class UnitState {
 public:
  // particle id = state_index * N + lane
  UnitState(const Family& family, const std::vector<int>& labels);

  // Projective measurement of exactly N particles (in the given tensor
  // order) in the family basis.  Samples an outcome, collapses, and
  // removes the measured particles.  Probabilities over the complete
  // basis sum to 1.
  int measure(const std::vector<int>& pids, Rng& rng);

  // Re-prepare the given particles in a fresh basis state (Eve's resend).
  void prepare(const std::vector<int>& pids, int label);

  const Family& family() const { return family_; }

 private:
  QuditCluster& cluster_of(int pid);
  void merge(const std::vector<int>& pids);  // into one cluster
  static void move_to_front(QuditCluster& c, const std::vector<int>& pids,
                            int local_dim);

  Family family_;
  std::vector<QuditCluster> clusters_;
};

// Draw an index from a discrete distribution given by `probs` (assumed
// to sum to 1 within rounding).
int sample_index(const std::vector<double>& probs, Rng& rng);

}  // namespace gcore
