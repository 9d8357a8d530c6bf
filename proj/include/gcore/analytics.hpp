#pragma once

#include <string>

#include "gcore/attacks.hpp"

// Resource accounting (efficiency, capacity, brute-force odds) and the
// report emitters the command-line tool prints from.

namespace gcore {

struct EfficiencyInput {
  std::string name;
  double useful_bits = 0.0;       // b_s: secret bits per accounting window
  double qubits_used = 0.0;       // q_t: quantum transmissions
  double classical_bits = 0.0;    // b_t: classical transmissions
};

// eta = b_s / (q_t + b_t); throws when inputs are non-positive in a way
// that makes the quotient meaningless or eta exceeds 1.
double efficiency(const EfficiencyInput& in);

// Standard accountings for one carrier unit of D = d^N labels.
EfficiencyInput gcore_accounting(const Family& family);
EfficiencyInput bb84_accounting();
EfficiencyInput epr_accounting();

struct Capacity {
  double bits_total = 0.0;         // M units of log2(d^N) bits
  double bits_per_particle = 0.0;  // log2(d^N) / (N d^N)
};

Capacity capacity(const Family& family, int units);

// log2 of the probability of guessing `digits` base-d control digits.
double key_guess_log2_probability(int base, int digits);

struct PaperCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Recomputes every closed-form headline figure and compares it against
// its frozen value.  All entries must pass for a healthy build.
std::vector<PaperCheck> verify_reference_figures();

// JSON report (canonical field order) for a finished session.
std::string session_report_json(const SessionConfig& config,
                                const SessionTranscript& transcript);

// JSON report for a Monte-Carlo or cloner attack study.
std::string attack_report_json(const Family& family, const AttackReport& report);

std::string paper_checks_json(const std::vector<PaperCheck>& checks);

// Permutation tables (1-indexed) for the CLI `tables` subcommand.
std::string tables_text(int dim, int particles);

}  // namespace gcore
