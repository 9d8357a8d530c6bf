#include "gcore/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gcore {

DensityOperator misgrouped_density(const Family& family,
                                   const std::vector<int>& offsets,
                                   const std::vector<int>& source_labels) {
  int n = family.particles;
  int d = family.dim;
  if (static_cast<int>(offsets.size()) != n)
    throw std::invalid_argument("need one source offset per lane");
  for (int o : offsets)
    if (o < 1) throw std::invalid_argument("source offsets are 1-based");

  // lanes contributed by each source, in order of first appearance
  std::vector<int> sources;
  std::map<int, std::vector<int>> lanes_of;
  for (int l = 0; l < n; ++l) {
    if (!lanes_of.count(offsets[l])) sources.push_back(offsets[l]);
    lanes_of[offsets[l]].push_back(l);
  }

  auto label_of = [&](size_t which_source) {
    if (source_labels.empty()) return 0;
    if (source_labels.size() != sources.size())
      throw std::invalid_argument("need one label per distinct source");
    return source_labels[which_source];
  };

  std::vector<int> dims(n, d);
  Mat product;
  std::vector<int> leg_order;  // lane carried by each tensor leg of `product`
  for (size_t s = 0; s < sources.size(); ++s) {
    StateVector psi = family_state(BasisLabel(family, label_of(s)));
    const auto& lanes = lanes_of[sources[s]];
    Mat factor =
        partial_trace(pure_density(psi), lanes, dims).matrix;
    product = (s == 0) ? factor : kron(product, factor);
    leg_order.insert(leg_order.end(), lanes.begin(), lanes.end());
  }

  // permute tensor legs back to lane order
  std::vector<int> pos(n);  // pos[lane] = leg position in `product`
  for (int p = 0; p < n; ++p) pos[leg_order[p]] = p;
  std::vector<Eigen::Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * d;
  auto remap = [&](Eigen::Index idx) {
    std::vector<int> digit(n);
    for (int p = 0; p < n; ++p) {
      digit[p] = static_cast<int>(idx / stride[p]);
      idx %= stride[p];
    }
    Eigen::Index out = 0;
    for (int lane = 0; lane < n; ++lane) out += digit[pos[lane]] * stride[lane];
    return out;
  };
  Mat out = Mat::Zero(product.rows(), product.cols());
  for (Eigen::Index i = 0; i < product.rows(); ++i)
    for (Eigen::Index j = 0; j < product.cols(); ++j)
      out(remap(i), remap(j)) = product(i, j);
  return DensityOperator(std::move(out));
}

double paper_error_rate(int basis_size, int distinct_sources) {
  if (basis_size < 2 || distinct_sources < 1)
    throw std::invalid_argument("paper_error_rate needs D >= 2, k >= 1");
  return std::pow(1.0 - 1.0 / basis_size, distinct_sources);
}

double detection_probability(double error_rate, int checks) {
  if (error_rate < 0.0 || error_rate > 1.0 || checks < 0)
    throw std::invalid_argument("bad detection probability arguments");
  return 1.0 - std::pow(1.0 - error_rate, checks);
}

double correlation_attack_mean(const Family& family,
                               const std::vector<ObservableDirection>& dirs,
                               CorrelationSource source) {
  int d_n = family.size();
  Mat rho_m;
  if (source == CorrelationSource::UncorrelatedTuple) {
    rho_m = Mat::Identity(d_n, d_n) / static_cast<double>(d_n);
  } else {
    rho_m = Mat::Zero(d_n, d_n);
    for (const Vec& psi : family_basis(family))
      rho_m += psi * psi.adjoint() / static_cast<double>(d_n);
  }
  DensityOperator rho(std::move(rho_m));
  if (family.dim == 2 && family.particles == 3) {
    if (dirs.size() != 3)
      throw std::invalid_argument("3-qubit correlation needs three directions");
    return pauli_correlation(rho, dirs[0], dirs[1], dirs[2]);
  }
  if (family.dim == 3 && family.particles == 2) {
    if (dirs.size() != 2)
      throw std::invalid_argument("2-qutrit correlation needs two directions");
    return gellmann_correlation(rho, dirs[0], dirs[1]);
  }
  throw std::invalid_argument("correlation families: (3,2) and (2,3) only");
}

// ---------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct UnitResult {
  bool guess_correct = false;
  int label_errors = 0;
  std::vector<int> eve_outcomes;
};

UnitResult attack_unit(const Family& fam, int key_index, int fixed_guess,
                       bool uniform_guess, std::uint64_t unit_seed) {
  Rng rng(unit_seed);
  int guess = fixed_guess;
  if (uniform_guess) {
    std::uniform_int_distribution<int> dist(0, fam.size() - 1);
    guess = dist(rng);
  }
  PermutationOp key_perm = general_permutation(fam.dim, fam.particles, key_index);
  PermutationOp guess_perm = general_permutation(fam.dim, fam.particles, guess);
  UnitRecord rec =
      simulate_unit(fam, key_perm, key_index, &guess_perm, guess, rng);
  UnitResult out;
  out.guess_correct = (guess == key_index);
  out.eve_outcomes = rec.eve_outcomes;
  for (size_t i = 0; i < rec.prepared.size(); ++i)
    if (rec.prepared[i] != rec.measured[i]) ++out.label_errors;
  return out;
}

AttackReport reduce_results(const Family& fam,
                            const std::vector<UnitResult>& results,
                            const AttackConfig& attack) {
  AttackReport rep;
  rep.units = static_cast<int>(results.size());
  int d_n = fam.size();
  rep.eve_first_outcome_counts.assign(d_n, 0);
  rep.eve_outcome_counts.assign(d_n, 0);
  long long errors = 0;
  for (const auto& r : results) {
    if (r.guess_correct) ++rep.eve_correct_guesses;
    errors += r.label_errors;
    if (!r.eve_outcomes.empty()) ++rep.eve_first_outcome_counts[r.eve_outcomes[0]];
    for (int o : r.eve_outcomes) ++rep.eve_outcome_counts[o];
  }
  rep.bob_label_error_rate =
      static_cast<double>(errors) / (static_cast<double>(rep.units) * d_n);
  int distinct = 2;  // lane-shift mixing joins particles of two states
  if (!attack.offsets.empty()) {
    std::vector<int> o = attack.offsets;
    std::sort(o.begin(), o.end());
    distinct = static_cast<int>(std::unique(o.begin(), o.end()) - o.begin());
  }
  rep.error_rate_paper_convention = paper_error_rate(d_n, distinct);
  rep.error_rate_uniform_convention = 1.0 - 1.0 / d_n;
  rep.detection_probability_per_unit =
      detection_probability(rep.bob_label_error_rate, d_n);
  return rep;
}

std::vector<int> key_indices_for(const Family& fam, const ControlKey& key,
                                 int units) {
  KeyBlockStream stream(key, fam.particles);
  std::vector<int> ks(units);
  for (int u = 0; u < units; ++u) ks[u] = stream.next_block_value();
  return ks;
}

}  // namespace

AttackReport intercept_resend_serial(const Family& family,
                                     const ControlKey& key,
                                     const AttackConfig& attack, int units,
                                     std::uint64_t seed) {
  if (units < 1) throw std::invalid_argument("units must be positive");
  if (attack.kind != AttackConfig::Kind::InterceptResend)
    throw std::invalid_argument("intercept_resend needs an InterceptResend config");
  bool uniform = attack.guess_strategy == AttackConfig::GuessStrategy::UniformRandom;
  std::vector<int> ks = key_indices_for(family, key, units);
  std::vector<UnitResult> results(units);
  for (int u = 0; u < units; ++u)
    results[u] = attack_unit(family, ks[u], attack.fixed_guess, uniform,
                             splitmix64(seed + static_cast<std::uint64_t>(u)));
  return reduce_results(family, results, attack);
}

AttackReport intercept_resend(const Family& family, const ControlKey& key,
                              const AttackConfig& attack, int units,
                              std::uint64_t seed, int threads) {
  if (units < 1) throw std::invalid_argument("units must be positive");
  if (attack.kind != AttackConfig::Kind::InterceptResend)
    throw std::invalid_argument("intercept_resend needs an InterceptResend config");
  bool uniform = attack.guess_strategy == AttackConfig::GuessStrategy::UniformRandom;
  std::vector<int> ks = key_indices_for(family, key, units);
  std::vector<UnitResult> results(units);
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 64)
#endif
  for (int u = 0; u < units; ++u)
    results[u] = attack_unit(family, ks[u], attack.fixed_guess, uniform,
                             splitmix64(seed + static_cast<std::uint64_t>(u)));
  return reduce_results(family, results, attack);
}

AttackReport cloner_attack(double v, double x) {
  AttackReport rep;
  ClonerAmplitudes amps = ClonerAmplitudes::symmetric(v, x);
  CloneFigures fig = clone_figures(amps);
  rep.fidelity_bob = fig.fidelity;
  rep.fidelity_eve = eve_fidelity(v, x);
  rep.info_alice_bob = mutual_information(rep.fidelity_bob, 3);
  rep.info_alice_eve = mutual_information(rep.fidelity_eve, 3);
  return rep;
}

// ---------------------------------------------------------------------

ClonerAmplitudes::ClonerAmplitudes(Mat amplitudes) : a(std::move(amplitudes)) {
  if (a.rows() != a.cols() || a.rows() < 2)
    throw std::invalid_argument("amplitude matrix must be square, d >= 2");
  if (std::abs(a.squaredNorm() - 1.0) > kTolExact)
    throw std::invalid_argument("cloner amplitudes not normalized");
}

ClonerAmplitudes ClonerAmplitudes::phase_covariant(double v, double x, double y,
                                                   double z) {
  Mat a(3, 3);
  a.col(0) << v, x, x;
  a.col(1) << y, y, y;
  a.col(2) << z, z, z;
  return ClonerAmplitudes(std::move(a));
}

ClonerAmplitudes ClonerAmplitudes::symmetric(double v, double x) {
  if (std::abs(v * v + 8 * x * x - 1.0) > kTolExact)
    throw std::invalid_argument("symmetric cloner needs v^2 + 8x^2 = 1");
  Mat a = Mat::Constant(3, 3, x);
  a(0, 0) = v;
  return ClonerAmplitudes(std::move(a));
}

ClonerAmplitudes fourier_dual(const ClonerAmplitudes& amps) {
  int d = amps.dim();
  Mat b = Mat::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int s = 0; s < d; ++s)
        for (int p = 0; p < d; ++p) {
          double theta = 2.0 * std::numbers::pi * (n * s - m * p) / d;
          b(m, n) += Complex(std::cos(theta), std::sin(theta)) * amps.a(s, p) /
                     static_cast<double>(d);
        }
  return ClonerAmplitudes(std::move(b));
}

CloneFigures clone_figures(const ClonerAmplitudes& amps) {
  CloneFigures fig;
  fig.fidelity = amps.a.row(0).squaredNorm();
  fig.disturbance_1 = amps.a.row(1).squaredNorm();
  fig.disturbance_2 = amps.dim() > 2 ? amps.a.row(2).squaredNorm() : 0.0;
  return fig;
}

namespace {

// pulls (v, x, y, z) out of the four-parameter pattern, rejecting other shapes
std::array<double, 4> pattern_params(const ClonerAmplitudes& amps) {
  if (amps.dim() != 3)
    throw std::invalid_argument("phase-covariant pattern is 3-dimensional");
  const Mat& a = amps.a;
  auto realpart = [](Complex c) {
    if (std::abs(c.imag()) > kTolExact)
      throw std::invalid_argument("pattern parameters must be real");
    return c.real();
  };
  double v = realpart(a(0, 0)), x = realpart(a(1, 0));
  double y = realpart(a(0, 1)), z = realpart(a(0, 2));
  if (std::abs(realpart(a(2, 0)) - x) > kTolExact ||
      std::abs(realpart(a(1, 1)) - y) > kTolExact ||
      std::abs(realpart(a(2, 1)) - y) > kTolExact ||
      std::abs(realpart(a(1, 2)) - z) > kTolExact ||
      std::abs(realpart(a(2, 2)) - z) > kTolExact)
    throw std::invalid_argument("amplitudes do not follow the (v,x,y,z) pattern");
  return {v, x, y, z};
}

}  // namespace

CloneFigures bob_fidelity(const ClonerAmplitudes& amps) {
  pattern_params(amps);  // validates normalization pattern
  return clone_figures(amps);
}

CloneFigures second_clone_fidelity(const ClonerAmplitudes& amps) {
  auto [v, x, y, z] = pattern_params(amps);
  if (std::abs(y - z) > kTolExact)
    throw std::invalid_argument("second-clone closed form needs y = z");
  CloneFigures fig;
  fig.fidelity = (v * v + 2 * x * x + 12 * y * y + 8 * x * y + 4 * v * y) / 3.0;
  fig.disturbance_1 =
      (v * v + 2 * x * x + 3 * y * y - 4 * x * y - 2 * v * y) / 3.0;
  fig.disturbance_2 = fig.disturbance_1;
  return fig;
}

double eve_fidelity(double v, double x) {
  if (std::abs(v * v + 8 * x * x - 1.0) > kTolExact)
    throw std::invalid_argument("eve_fidelity needs v^2 + 8x^2 = 1");
  return ((v + 8 * x) * (v + 8 * x) + 2 * (v - x) * (v - x)) / 9.0;
}

OptimalCloner optimal_cloner(double bob_fidelity) {
  if (bob_fidelity < 1.0 / 3.0 || bob_fidelity > 1.0)
    throw std::invalid_argument("fidelity must lie in [1/3, 1]");
  OptimalCloner opt;
  opt.v = bob_fidelity;
  opt.x = std::sqrt(bob_fidelity * (1.0 - bob_fidelity) / 2.0);
  double scale = 1.0 / std::sqrt(opt.v * opt.v + 8 * opt.x * opt.x);
  opt.v_normalized = scale * opt.v;
  opt.x_normalized = scale * opt.x;
  opt.eve_fidelity = optimal_eve_fidelity(bob_fidelity, 3);
  return opt;
}

double optimal_eve_fidelity(double bob_fidelity, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  double f = bob_fidelity;
  if (f < 1.0 / d || f > 1.0)
    throw std::invalid_argument("fidelity must lie in [1/d, 1]");
  return f / d + (d - 1) * (1.0 - f) / d +
         (2.0 / d) * std::sqrt((d - 1) * f * (1.0 - f));
}

double mutual_information(double fidelity, int d) {
  if (fidelity < 0.0 || fidelity > 1.0)
    throw std::invalid_argument("fidelity must lie in [0, 1]");
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  auto xlog2 = [](double p) { return p > 0.0 ? p * std::log2(p) : 0.0; };
  double info = std::log2(static_cast<double>(d)) + xlog2(fidelity);
  if (fidelity < 1.0)
    info += (1.0 - fidelity) * std::log2((1.0 - fidelity) / (d - 1));
  return info;
}

Threshold security_threshold(int d) {
  Threshold t;
  if (d == 2)
    t.fidelity = 0.5 * (1.0 + 1.0 / std::sqrt(2.0));
  else if (d == 3)
    t.fidelity = 0.5 * (1.0 + 1.0 / std::sqrt(3.0));
  else
    throw std::invalid_argument("closed-form threshold known for d = 2, 3");
  t.disturbance = 1.0 - t.fidelity;
  return t;
}

double threshold_numeric_root(int d) {
  auto gap = [&](double f) {
    return mutual_information(f, d) -
           mutual_information(optimal_eve_fidelity(f, d), d);
  };
  double lo = 1.0 / d + 1e-9, hi = 1.0 - 1e-12;
  if (gap(lo) >= 0.0 || gap(hi) <= 0.0)
    throw std::runtime_error("information gap does not bracket a root");
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2.0;
    (gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

std::vector<CurveRow> cloner_curve(int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("need at least two grid points");
  std::vector<CurveRow> rows;
  rows.reserve(grid_points);
  double lo = 1.0 / 3.0, hi = 1.0;
  for (int i = 0; i < grid_points; ++i) {
    CurveRow r;
    r.fidelity = lo + (hi - lo) * i / (grid_points - 1);
    r.fidelity_eve = optimal_eve_fidelity(r.fidelity, 3);
    r.info_alice_bob = mutual_information(r.fidelity, 3);
    r.info_alice_eve = mutual_information(r.fidelity_eve, 3);
    rows.push_back(r);
  }
  return rows;
}

std::string cloner_curve_csv(const std::vector<CurveRow>& rows) {
  std::string out = "F,F_E,I_AB,I_AE\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", r.fidelity,
                  r.fidelity_eve, r.info_alice_bob, r.info_alice_eve);
    out += buf;
  }
  return out;
}

}  // namespace gcore
