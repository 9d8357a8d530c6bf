#include "gcore/analytics.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace gcore {

double efficiency(const EfficiencyInput& in) {
  if (in.useful_bits <= 0.0)
    throw std::invalid_argument("useful bits must be positive");
  double denom = in.qubits_used + in.classical_bits;
  if (denom <= 0.0)
    throw std::invalid_argument("transmission cost must be positive");
  double eta = in.useful_bits / denom;
  if (eta > 1.0 + kTolExact)
    throw std::invalid_argument("efficiency above 1 indicates a bad accounting");
  return eta;
}

EfficiencyInput gcore_accounting(const Family& family) {
  // whole-unit window: D labels of log2 D bits each ride D*N particles,
  // which count as D log2 d * N / N ... i.e. q_t = log2 of the full unit
  // Hilbert space, and no classical bits are consumed per key bit.
  double bits = family.size() * std::log2(static_cast<double>(family.size()));
  return {"gcore", bits, bits, 0.0};
}

EfficiencyInput bb84_accounting() { return {"bb84", 1.0, 2.0, 2.0}; }

EfficiencyInput epr_accounting() { return {"epr", 1.0, 1.0, 1.0}; }

Capacity capacity(const Family& family, int units) {
  if (units < 1) throw std::invalid_argument("units must be positive");
  Capacity c;
  double per_unit = std::log2(static_cast<double>(family.size()));
  c.bits_total = units * per_unit;
  c.bits_per_particle = per_unit / (family.particles * family.size());
  return c;
}

double key_guess_log2_probability(int base, int digits) {
  if (base < 2 || digits < 1)
    throw std::invalid_argument("need base >= 2 and at least one digit");
  return -digits * std::log2(static_cast<double>(base));
}

std::vector<PaperCheck> verify_reference_figures() {
  std::vector<PaperCheck> checks;
  auto add = [&](std::string name, double expected, double actual,
                 double tol) {
    checks.push_back({std::move(name), expected, actual, tol,
                      std::abs(expected - actual) <= tol});
  };

  add("error_rate_D8_k3", 343.0 / 512.0, paper_error_rate(8, 3), 1e-15);
  add("error_rate_D8_k2", 49.0 / 64.0, paper_error_rate(8, 2), 1e-15);
  add("error_rate_D9_k2", 64.0 / 81.0, paper_error_rate(9, 2), 1e-15);
  add("error_rate_D8_k3_percent", 66.99, 100.0 * paper_error_rate(8, 3), 5e-3);

  add("efficiency_gcore", 1.0, efficiency(gcore_accounting(Family(3, 2))),
      1e-15);
  add("efficiency_bb84", 0.25, efficiency(bb84_accounting()), 1e-15);
  add("efficiency_epr", 0.5, efficiency(epr_accounting()), 1e-15);

  Threshold t3 = security_threshold(3);
  add("threshold_fidelity_d3", 0.5 * (1.0 + 1.0 / std::sqrt(3.0)), t3.fidelity,
      1e-15);
  add("threshold_disturbance_d3", 0.5 * (1.0 - 1.0 / std::sqrt(3.0)),
      t3.disturbance, 1e-15);
  add("threshold_fidelity_d2", 0.5 * (1.0 + 1.0 / std::sqrt(2.0)),
      security_threshold(2).fidelity, 1e-15);
  add("threshold_root_d3", t3.fidelity, threshold_numeric_root(3), 1e-9);
  add("threshold_root_d2", security_threshold(2).fidelity,
      threshold_numeric_root(2), 1e-9);
  add("info_at_threshold_d3", 0.6296301, mutual_information(t3.fidelity, 3),
      5e-7);
  add("optimal_eve_fidelity_at_0p75", 0.824915,
      optimal_eve_fidelity(0.75, 3), 5e-7);
  add("mutual_information_perfect_d3", std::log2(3.0),
      mutual_information(1.0, 3), 1e-15);

  // mis-grouped tuple reductions against their closed-form matrices
  auto max_dev = [](const Mat& a, const Mat& b) {
    return (a - b).cwiseAbs().maxCoeff();
  };
  {
    Family f(3, 2);
    Mat expect = Mat::Identity(8, 8) / 8.0;
    add("misgrouped_qubit_three_sources", 0.0,
        max_dev(misgrouped_density(f, {1, 2, 3}).matrix, expect), 1e-12);
    Mat half = Mat::Identity(2, 2) / 2.0;
    Mat pair = Mat::Zero(4, 4);
    pair(0, 0) = 0.5;
    pair(3, 3) = 0.5;
    add("misgrouped_qubit_two_sources", 0.0,
        max_dev(misgrouped_density(f, {1, 2, 2}).matrix, kron(half, pair)),
        1e-12);
  }
  {
    Family f(2, 3);
    Mat expect = Mat::Identity(9, 9) / 9.0;
    add("misgrouped_qutrit_two_sources", 0.0,
        max_dev(misgrouped_density(f, {1, 2}).matrix, expect), 1e-12);
  }
  return checks;
}

namespace {
using nlohmann::json;

json family_json(const Family& f) {
  return json{{"particles", f.particles}, {"dim", f.dim}, {"basis_size", f.size()}};
}
}  // namespace

std::string session_report_json(const SessionConfig& config,
                                const SessionTranscript& transcript) {
  json j;
  j["family"] = family_json(config.family);
  j["num_units"] = config.num_units;
  j["check_fraction"] = config.check_fraction;
  j["seed"] = config.seed;
  j["control_key"] = config.control_key.to_string();
  j["adversary"] = config.adversary.has_value();
  j["eavesdropping_detected"] = transcript.eavesdropping_detected;
  j["checked_positions"] = transcript.check_positions.size();
  j["disclosed_digits"] = transcript.disclosed_digits;
  j["sifted_digits"] = transcript.sifted_digits;
  Capacity cap = capacity(config.family, config.num_units);
  j["capacity_bits_total"] = cap.bits_total;
  j["capacity_bits_per_particle"] = cap.bits_per_particle;
  j["efficiency"] = efficiency(gcore_accounting(config.family));
  return j.dump(2) + "\n";
}

std::string attack_report_json(const Family& family,
                               const AttackReport& report) {
  json j;
  j["family"] = family_json(family);
  j["units"] = report.units;
  j["eve_correct_guesses"] = report.eve_correct_guesses;
  j["bob_label_error_rate"] = report.bob_label_error_rate;
  j["eve_first_outcome_counts"] = report.eve_first_outcome_counts;
  j["eve_outcome_counts"] = report.eve_outcome_counts;
  j["error_rate_paper_convention"] = report.error_rate_paper_convention;
  j["error_rate_uniform_convention"] = report.error_rate_uniform_convention;
  j["detection_probability_per_unit"] = report.detection_probability_per_unit;
  j["fidelity_bob"] = report.fidelity_bob;
  j["fidelity_eve"] = report.fidelity_eve;
  j["info_alice_bob"] = report.info_alice_bob;
  j["info_alice_eve"] = report.info_alice_eve;
  return j.dump(2) + "\n";
}

std::string paper_checks_json(const std::vector<PaperCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back(json{{"name", c.name},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  json j{{"checks", arr}, {"all_pass", all}};
  return j.dump(2) + "\n";
}

std::string tables_text(int dim, int particles) {
  auto tables = permutation_tables(dim, particles);
  std::ostringstream out;
  out << "Rearrangement tables for d=" << dim << ", N=" << particles
      << " (1-indexed slots)\n";
  for (size_t k = 0; k < tables.size(); ++k) {
    out << "E_" << k << ":";
    for (int v : tables[k]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace gcore
