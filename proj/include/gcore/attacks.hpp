#pragma once

#include "gcore/protocol.hpp"

// Adversary models and their exact analyses: mis-grouped intercept-resend
// (density-operator oracle plus Monte Carlo), correlation-measurement
// futility, and the phase-covariant cloning machine with the closed-form
// fidelity, disturbance and information formulas.

namespace gcore {

// Exact density operator of Eve's regrouped tuple.  offsets[l] names the
// source state lane l's particle comes from (1-based, as in "A from the
// first, B from the second").  source_labels fixes the basis label each
// source was prepared in; when empty, label 0 is used for every source
// (for sources contributing a single particle the reduction is
// label-independent, so this also equals the uniform label average).
DensityOperator misgrouped_density(const Family& family,
                                   const std::vector<int>& offsets,
                                   const std::vector<int>& source_labels = {});

// (1 - 1/D)^k: the convention reproducing the printed 66.99%, 76.56%
// and 79.01% figures, with k the number of distinct sources.
double paper_error_rate(int basis_size, int distinct_sources);

// 1 - (1-e)^s for per-label error rate e and check size s.
double detection_probability(double error_rate, int checks);

enum class CorrelationSource { UniformBasisMixture, UncorrelatedTuple };

// Mean correlation over the specified source; 0 for both sources for
// every direction choice (the futility of Eve's Bell measurements).
double correlation_attack_mean(const Family& family,
                               const std::vector<ObservableDirection>& dirs,
                               CorrelationSource source);

// ---------------------------------------------------------------------
// Intercept-resend Monte Carlo

struct AttackReport {
  int units = 0;
  int eve_correct_guesses = 0;
  // empirical figures
  double bob_label_error_rate = 0.0;
  std::vector<long long> eve_first_outcome_counts;  // first tuple per unit
  std::vector<long long> eve_outcome_counts;        // all tuples
  // analytic figures, both conventions reported side by side
  double error_rate_paper_convention = 0.0;    // (1-1/D)^k
  double error_rate_uniform_convention = 0.0;  // 1-1/D
  double detection_probability_per_unit = 0.0;
  // cloner figures (Cloner kind only)
  double fidelity_bob = 0.0;
  double fidelity_eve = 0.0;
  double info_alice_bob = 0.0;
  double info_alice_eve = 0.0;
};

// Runs `units` independent intercept-resend units.  The parallel version
// partitions units across OpenMP threads with per-unit seeded streams and
// a deterministic merge, so its report is identical to the serial one.
AttackReport intercept_resend_serial(const Family& family,
                                     const ControlKey& key,
                                     const AttackConfig& attack, int units,
                                     std::uint64_t seed);
AttackReport intercept_resend(const Family& family, const ControlKey& key,
                              const AttackConfig& attack, int units,
                              std::uint64_t seed, int threads = 0);

// Closed-form report for the cloning attack at amplitudes (v, x).
AttackReport cloner_attack(double v, double x);

// ---------------------------------------------------------------------
// Phase-covariant cloning machine

// Amplitude matrix a(m, n): shift index m, phase index n.
struct ClonerAmplitudes {
  Mat a;

  explicit ClonerAmplitudes(Mat amplitudes);
  int dim() const { return static_cast<int>(a.rows()); }
  // the (v, x; y, y; z, z) pattern of the qutrit phase-covariant cloner
  static ClonerAmplitudes phase_covariant(double v, double x, double y,
                                          double z);
  // the v / x pattern with v^2 + 8x^2 = 1
  static ClonerAmplitudes symmetric(double v, double x);
};

// b_{m,n} = (1/d) sum_{x,y} e^{2 pi i (nx - my)/d} a_{x,y}
ClonerAmplitudes fourier_dual(const ClonerAmplitudes& a);

struct CloneFigures {
  double fidelity = 0.0;
  double disturbance_1 = 0.0;
  double disturbance_2 = 0.0;
};

// Computational-basis fidelity and shift-error weights of the clone the
// amplitudes describe: F = sum_n |a(0,n)|^2, D_k = sum_n |a(k,n)|^2.
CloneFigures clone_figures(const ClonerAmplitudes& a);

// F_A = v^2+y^2+z^2, D_A1 = D_A2 = x^2+y^2+z^2 for the four-parameter pattern.
CloneFigures bob_fidelity(const ClonerAmplitudes& a);

// Second-clone closed forms, valid at y = z.
CloneFigures second_clone_fidelity(const ClonerAmplitudes& a);

// F_E = ((v+8x)^2 + 2(v-x)^2)/9, requires v^2+8x^2 = 1.
double eve_fidelity(double v, double x);

struct OptimalCloner {
  double v = 0.0;          // literal pair from the maximization, v = F
  double x = 0.0;          // x = sqrt(F(1-F)/2)
  double v_normalized = 0.0;  // projection of (v,x) onto v^2+8x^2 = 1
  double x_normalized = 0.0;
  double eve_fidelity = 0.0;  // closed-form optimal F_E(F)
};

OptimalCloner optimal_cloner(double bob_fidelity);

// Optimal Eve fidelity as a function of Bob's; d = 3 is the printed
// F/3 + 2(1-F)/3 + (2/3) sqrt(2F(1-F)) form.
double optimal_eve_fidelity(double bob_fidelity, int d);

// I = log2 d + F log2 F + (1-F) log2((1-F)/(d-1))
double mutual_information(double fidelity, int d = 3);

struct Threshold {
  double fidelity = 0.0;
  double disturbance = 0.0;
};

// Closed-form intersection fidelity/disturbance for d in {2, 3}.
Threshold security_threshold(int d);

// Bisection root of I_AB(F) - I_AE(F_E(F)) on (1/d, 1).
double threshold_numeric_root(int d);

struct CurveRow {
  double fidelity = 0.0;
  double fidelity_eve = 0.0;
  double info_alice_bob = 0.0;
  double info_alice_eve = 0.0;
};

// Uniform grid over [1/3, 1] reproducing the information-vs-fidelity
// figure; the two curves cross exactly once.
std::vector<CurveRow> cloner_curve(int grid_points);

std::string cloner_curve_csv(const std::vector<CurveRow>& rows);

}  // namespace gcore
