#pragma once

#include <optional>

#include "gcore/permutation.hpp"
#include "gcore/register.hpp"

// End-to-end GCORE sessions: Alice's preparation, lane transmission with
// an adversary insertion point, Bob's dearrangement and measurement,
// check-subset sifting, and the multiparty relay.

namespace gcore {

struct AttackConfig {
  enum class Kind { InterceptResend, Cloner };
  enum class GuessStrategy { UniformRandom, FixedKey };

  Kind kind = Kind::InterceptResend;
  GuessStrategy guess_strategy = GuessStrategy::UniformRandom;
  int fixed_guess = 0;            // permutation index when strategy is FixedKey
  std::vector<int> offsets;       // mis-grouping pattern for density analysis
  double cloner_v = 1.0;          // phase-covariant amplitudes, Cloner kind
  double cloner_x = 0.0;
};

struct SessionConfig {
  Family family;
  int num_units = 0;
  ControlKey control_key;
  double check_fraction = 0.25;
  std::uint64_t seed = 0;
  std::optional<AttackConfig> adversary;
  // fault injection: Bob decodes with this key instead of the shared one
  std::optional<ControlKey> bob_key_override;

  SessionConfig(Family f, int units, ControlKey key)
      : family(f), num_units(units), control_key(std::move(key)) {}
  void validate() const;
};

// One carrier unit in flight: quantum state plus per-lane particle order.
struct CarrierUnit {
  std::vector<int> labels;              // prepared, index per slot
  UnitState state;
  std::vector<std::vector<int>> lanes;  // lanes[l][slot] = particle id
  int perm_index = 0;
};

struct UnitRecord {
  int perm_index = 0;
  std::vector<int> prepared;
  std::vector<int> eve_outcomes;  // empty when no adversary acted
  int eve_guess = -1;
  std::vector<int> measured;
};

struct SessionTranscript {
  std::vector<UnitRecord> units;
  std::vector<int> check_positions;  // global slot positions compared
  bool eavesdropping_detected = false;
  std::vector<int> sifted_digits;    // base-d digits, MSB of each label first
  int disclosed_digits = 0;
};

// Step (i)-(ii): draw labels (or encode the given ones), apply the
// key-derived permutation to lanes 2..N, lane 1 stays in temporal order.
CarrierUnit alice_prepare(const Family& family, const PermutationOp& perm,
                          int perm_index, Rng& rng,
                          const std::vector<int>* fixed_labels = nullptr);

// Eve's intercept-resend: undo her guessed permutation, regroup by slot,
// measure each tuple in the entangled family, re-prepare the observed
// state on the same particles, forward in the received order.
std::vector<int> eve_intercept(CarrierUnit& unit, const PermutationOp& guess,
                               Rng& rng);

// Steps (iii)-(iv): invert the schedule, regroup into tuples, measure.
std::vector<int> bob_recover(CarrierUnit& unit, const PermutationOp& bob_perm,
                             Rng& rng);

struct SiftResult {
  bool eavesdropped = false;
  std::vector<int> check_positions;
  std::vector<int> raw_digits;
  int disclosed_digits = 0;
};

SiftResult sift_and_check(const std::vector<int>& prepared,
                          const std::vector<int>& measured,
                          double check_fraction, const Family& family,
                          Rng& rng);

SessionTranscript run_session(const SessionConfig& config);

// Bob re-encodes his sifted digits as basis labels and runs a full
// session to the next party; leftover digits that do not fill a whole
// unit are dropped.
SessionTranscript multiparty_relay(const std::vector<int>& bob_key_digits,
                                   const SessionConfig& downstream);

// Simulates one unit end to end; shared by the session engine and the
// Monte-Carlo attack driver.
UnitRecord simulate_unit(const Family& family, const PermutationOp& key_perm,
                         int perm_index, const PermutationOp* eve_guess,
                         int eve_guess_index, Rng& rng,
                         const std::vector<int>* fixed_labels = nullptr);

}  // namespace gcore
