#include "gcore/register.hpp"

#include <algorithm>
#include <cmath>

namespace gcore {

namespace {
constexpr Eigen::Index kClusterDimCap = 19683;  // 3^9 defensive bound
}

UnitState::UnitState(const Family& family, const std::vector<int>& labels)
    : family_(family) {
  const auto& basis = family_basis(family);
  clusters_.reserve(labels.size());
  for (size_t s = 0; s < labels.size(); ++s) {
    QuditCluster c;
    for (int l = 0; l < family.particles; ++l)
      c.particles.push_back(static_cast<int>(s) * family.particles + l);
    c.amps = basis.at(labels[s]);
    clusters_.push_back(std::move(c));
  }
}

QuditCluster& UnitState::cluster_of(int pid) {
  for (auto& c : clusters_)
    if (std::find(c.particles.begin(), c.particles.end(), pid) !=
        c.particles.end())
      return c;
  throw std::runtime_error("particle not present in any cluster");
}

void UnitState::merge(const std::vector<int>& pids) {
  QuditCluster* target = &cluster_of(pids[0]);
  for (size_t i = 1; i < pids.size(); ++i) {
    QuditCluster& other = cluster_of(pids[i]);
    if (&other == target) continue;
    if (target->amps.size() * other.amps.size() > kClusterDimCap)
      throw std::runtime_error("cluster dimension cap exceeded");
    target->amps = kron(target->amps, other.amps);
    target->particles.insert(target->particles.end(), other.particles.begin(),
                             other.particles.end());
    // erase `other`; take care not to invalidate `target`
    QuditCluster* other_ptr = &other;
    size_t target_idx = static_cast<size_t>(target - clusters_.data());
    size_t other_idx = static_cast<size_t>(other_ptr - clusters_.data());
    clusters_.erase(clusters_.begin() + static_cast<long>(other_idx));
    if (other_idx < target_idx) --target_idx;
    target = &clusters_[target_idx];
  }
}

void UnitState::move_to_front(QuditCluster& c, const std::vector<int>& pids,
                              int local_dim) {
  int q = static_cast<int>(c.particles.size());
  // new leg order: pids first (as given), then the rest in current order
  std::vector<int> order;
  for (int pid : pids) {
    auto it = std::find(c.particles.begin(), c.particles.end(), pid);
    order.push_back(static_cast<int>(it - c.particles.begin()));
  }
  for (int leg = 0; leg < q; ++leg)
    if (std::find(order.begin(), order.end(), leg) == order.end())
      order.push_back(leg);

  std::vector<Eigen::Index> stride(q, 1);
  for (int s = q - 2; s >= 0; --s) stride[s] = stride[s + 1] * local_dim;

  Vec out(c.amps.size());
  std::vector<int> digit(q);
  for (Eigen::Index idx = 0; idx < out.size(); ++idx) {
    Eigen::Index rest = idx;
    for (int s = 0; s < q; ++s) {
      digit[s] = static_cast<int>(rest / stride[s]);
      rest %= stride[s];
    }
    Eigen::Index old_idx = 0;
    for (int s = 0; s < q; ++s) old_idx += digit[s] * stride[order[s]];
    out(idx) = c.amps(old_idx);
  }
  c.amps = std::move(out);
  std::vector<int> new_particles;
  for (int s = 0; s < q; ++s) new_particles.push_back(c.particles[order[s]]);
  c.particles = std::move(new_particles);
}

int UnitState::measure(const std::vector<int>& pids, Rng& rng) {
  if (static_cast<int>(pids.size()) != family_.particles)
    throw std::invalid_argument("measurement needs exactly N particles");
  merge(pids);
  QuditCluster& c = cluster_of(pids[0]);
  move_to_front(c, pids, family_.dim);

  int front_dim = family_.size();
  Eigen::Index rest_dim = c.amps.size() / front_dim;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      m(c.amps.data(), front_dim, rest_dim);

  const auto& basis = family_basis(family_);
  std::vector<double> probs(basis.size());
  std::vector<Eigen::RowVectorXcd> residuals(basis.size());
  for (size_t l = 0; l < basis.size(); ++l) {
    residuals[l] = basis[l].adjoint() * m;
    probs[l] = residuals[l].squaredNorm();
  }
  int outcome = sample_index(probs, rng);

  if (rest_dim == 1) {
    clusters_.erase(clusters_.begin() + (&c - clusters_.data()));
  } else {
    c.amps = residuals[outcome].transpose() / std::sqrt(probs[outcome]);
    c.particles.erase(c.particles.begin(),
                      c.particles.begin() + family_.particles);
  }
  return outcome;
}

void UnitState::prepare(const std::vector<int>& pids, int label) {
  for (int pid : pids)
    for (auto& c : clusters_)
      if (std::find(c.particles.begin(), c.particles.end(), pid) !=
          c.particles.end())
        throw std::runtime_error("re-preparing a particle still in a cluster");
  QuditCluster c;
  c.particles = pids;
  c.amps = family_basis(family_).at(label);
  clusters_.push_back(std::move(c));
}

int sample_index(const std::vector<double>& probs, Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double u = uni(rng);
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;  // rounding fell off the end
}

}  // namespace gcore
