#include "gcore/protocol.hpp"

#include <algorithm>

namespace gcore {

void SessionConfig::validate() const {
  if (num_units < 1) throw std::invalid_argument("num_units must be positive");
  if (check_fraction <= 0.0 || check_fraction >= 1.0)
    throw std::invalid_argument("check_fraction must lie in (0,1)");
  if (control_key.base != family.dim)
    throw std::invalid_argument("control key base must equal family dimension");
  if (bob_key_override && bob_key_override->base != family.dim)
    throw std::invalid_argument("bob key base must equal family dimension");
}

CarrierUnit alice_prepare(const Family& family, const PermutationOp& perm,
                          int perm_index, Rng& rng,
                          const std::vector<int>* fixed_labels) {
  int d_n = family.size();
  std::vector<int> labels;
  if (fixed_labels) {
    if (static_cast<int>(fixed_labels->size()) != d_n)
      throw std::invalid_argument("fixed labels must fill the unit");
    labels = *fixed_labels;
  } else {
    std::uniform_int_distribution<int> uni(0, d_n - 1);
    labels.reserve(d_n);
    for (int i = 0; i < d_n; ++i) labels.push_back(uni(rng));
  }

  CarrierUnit unit{labels, UnitState(family, labels), {}, perm_index};
  std::vector<int> natural(d_n);
  for (int s = 0; s < d_n; ++s) natural[s] = s;
  // lane 0 keeps temporal order; the control key rearranges the rest
  for (int l = 0; l < family.particles; ++l) {
    std::vector<int> order =
        (l == 0) ? natural : apply_rearrangement(natural, perm);
    std::vector<int> lane(d_n);
    for (int slot = 0; slot < d_n; ++slot)
      lane[slot] = order[slot] * family.particles + l;
    unit.lanes.push_back(std::move(lane));
  }
  return unit;
}

namespace {

// Slot-wise tuples after undoing `perm` on lanes 2..N.
std::vector<std::vector<int>> regroup(const CarrierUnit& unit,
                                      const PermutationOp& perm) {
  const Family& fam = unit.state.family();
  int d_n = fam.size();
  std::vector<std::vector<int>> lanes = unit.lanes;
  for (int l = 1; l < fam.particles; ++l)
    lanes[l] = invert_rearrangement(lanes[l], perm);
  std::vector<std::vector<int>> tuples(d_n);
  for (int slot = 0; slot < d_n; ++slot)
    for (int l = 0; l < fam.particles; ++l)
      tuples[slot].push_back(lanes[l][slot]);
  return tuples;
}

}  // namespace

std::vector<int> eve_intercept(CarrierUnit& unit, const PermutationOp& guess,
                               Rng& rng) {
  auto tuples = regroup(unit, guess);
  std::vector<int> outcomes;
  outcomes.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    int outcome = unit.state.measure(tuple, rng);
    unit.state.prepare(tuple, outcome);
    outcomes.push_back(outcome);
  }
  // she re-applies her guess on forwarding, so lane order is unchanged
  return outcomes;
}

std::vector<int> bob_recover(CarrierUnit& unit, const PermutationOp& bob_perm,
                             Rng& rng) {
  if (unit.lanes.empty() || unit.lanes[0].empty())
    throw std::runtime_error("incomplete lane stream");
  auto tuples = regroup(unit, bob_perm);
  std::vector<int> measured;
  measured.reserve(tuples.size());
  for (const auto& tuple : tuples) measured.push_back(unit.state.measure(tuple, rng));
  return measured;
}

SiftResult sift_and_check(const std::vector<int>& prepared,
                          const std::vector<int>& measured,
                          double check_fraction, const Family& family,
                          Rng& rng) {
  if (prepared.size() != measured.size())
    throw std::invalid_argument("label sequences differ in length");
  SiftResult res;
  std::bernoulli_distribution pick(check_fraction);
  std::vector<bool> checked(prepared.size(), false);
  for (size_t i = 0; i < prepared.size(); ++i) {
    if (pick(rng)) {
      checked[i] = true;
      res.check_positions.push_back(static_cast<int>(i));
      if (prepared[i] != measured[i]) res.eavesdropped = true;
    }
  }
  res.disclosed_digits =
      static_cast<int>(res.check_positions.size()) * family.particles;
  for (size_t i = 0; i < measured.size(); ++i) {
    if (checked[i]) continue;
    BasisLabel label(family, measured[i]);
    for (int digit : label.digits()) res.raw_digits.push_back(digit);
  }
  return res;
}

UnitRecord simulate_unit(const Family& family, const PermutationOp& key_perm,
                         int perm_index, const PermutationOp* eve_guess,
                         int eve_guess_index, Rng& rng,
                         const std::vector<int>* fixed_labels) {
  UnitRecord rec;
  rec.perm_index = perm_index;
  CarrierUnit unit =
      alice_prepare(family, key_perm, perm_index, rng, fixed_labels);
  rec.prepared = unit.labels;
  if (eve_guess) {
    rec.eve_guess = eve_guess_index;
    rec.eve_outcomes = eve_intercept(unit, *eve_guess, rng);
  }
  rec.measured = bob_recover(unit, key_perm, rng);
  return rec;
}

SessionTranscript run_session(const SessionConfig& config) {
  config.validate();
  const Family& fam = config.family;
  Rng rng(config.seed);
  KeyBlockStream keys(config.control_key, fam.particles);
  std::optional<KeyBlockStream> bob_keys;
  if (config.bob_key_override)
    bob_keys.emplace(*config.bob_key_override, fam.particles);

  bool eve_active = config.adversary &&
                    config.adversary->kind == AttackConfig::Kind::InterceptResend;
  std::uniform_int_distribution<int> guess_dist(0, fam.size() - 1);

  SessionTranscript t;
  std::vector<int> prepared_all, measured_all;
  for (int u = 0; u < config.num_units; ++u) {
    int k = keys.next_block_value();
    PermutationOp key_perm = general_permutation(fam.dim, fam.particles, k);
    UnitRecord rec;
    rec.perm_index = k;
    CarrierUnit unit = alice_prepare(fam, key_perm, k, rng);
    rec.prepared = unit.labels;

    if (eve_active) {
      int g = config.adversary->guess_strategy ==
                      AttackConfig::GuessStrategy::FixedKey
                  ? config.adversary->fixed_guess
                  : guess_dist(rng);
      rec.eve_guess = g;
      rec.eve_outcomes = eve_intercept(
          unit, general_permutation(fam.dim, fam.particles, g), rng);
    }

    PermutationOp bob_perm =
        bob_keys ? general_permutation(fam.dim, fam.particles,
                                       bob_keys->next_block_value())
                 : key_perm;
    rec.measured = bob_recover(unit, bob_perm, rng);

    prepared_all.insert(prepared_all.end(), rec.prepared.begin(),
                        rec.prepared.end());
    measured_all.insert(measured_all.end(), rec.measured.begin(),
                        rec.measured.end());
    t.units.push_back(std::move(rec));
  }

  SiftResult sift = sift_and_check(prepared_all, measured_all,
                                   config.check_fraction, fam, rng);
  t.check_positions = std::move(sift.check_positions);
  t.eavesdropping_detected = sift.eavesdropped;
  t.sifted_digits = std::move(sift.raw_digits);
  t.disclosed_digits = sift.disclosed_digits;
  return t;
}

SessionTranscript multiparty_relay(const std::vector<int>& bob_key_digits,
                                   const SessionConfig& downstream) {
  if (bob_key_digits.empty())
    throw std::invalid_argument("relay input key is empty");
  const Family& fam = downstream.family;
  int digits_per_unit = fam.particles * fam.size();
  int units = static_cast<int>(bob_key_digits.size()) / digits_per_unit;
  if (units < 1)
    throw std::invalid_argument("relay input key shorter than one unit");

  SessionConfig cfg = downstream;
  cfg.num_units = units;
  cfg.validate();

  // encode digits as labels, N digits per label, MSB first
  std::vector<std::vector<int>> unit_labels(units);
  size_t pos = 0;
  for (int u = 0; u < units; ++u)
    for (int s = 0; s < fam.size(); ++s) {
      int idx = 0;
      for (int i = 0; i < fam.particles; ++i) {
        int digit = bob_key_digits[pos++];
        if (digit < 0 || digit >= fam.dim)
          throw std::invalid_argument("relay key digit out of range");
        idx = idx * fam.dim + digit;
      }
      unit_labels[u].push_back(idx);
    }

  Rng rng(cfg.seed);
  KeyBlockStream keys(cfg.control_key, fam.particles);
  bool eve_active = cfg.adversary &&
                    cfg.adversary->kind == AttackConfig::Kind::InterceptResend;
  std::uniform_int_distribution<int> guess_dist(0, fam.size() - 1);

  SessionTranscript t;
  std::vector<int> prepared_all, measured_all;
  for (int u = 0; u < units; ++u) {
    int k = keys.next_block_value();
    PermutationOp key_perm = general_permutation(fam.dim, fam.particles, k);
    UnitRecord rec;
    rec.perm_index = k;
    CarrierUnit unit = alice_prepare(fam, key_perm, k, rng, &unit_labels[u]);
    rec.prepared = unit.labels;
    if (eve_active) {
      int g = cfg.adversary->guess_strategy == AttackConfig::GuessStrategy::FixedKey
                  ? cfg.adversary->fixed_guess
                  : guess_dist(rng);
      rec.eve_guess = g;
      rec.eve_outcomes = eve_intercept(
          unit, general_permutation(fam.dim, fam.particles, g), rng);
    }
    rec.measured = bob_recover(unit, key_perm, rng);
    prepared_all.insert(prepared_all.end(), rec.prepared.begin(),
                        rec.prepared.end());
    measured_all.insert(measured_all.end(), rec.measured.begin(),
                        rec.measured.end());
    t.units.push_back(std::move(rec));
  }

  SiftResult sift = sift_and_check(prepared_all, measured_all,
                                   cfg.check_fraction, fam, rng);
  t.check_positions = std::move(sift.check_positions);
  t.eavesdropping_detected = sift.eavesdropped;
  t.sifted_digits = std::move(sift.raw_digits);
  t.disclosed_digits = sift.disclosed_digits;
  return t;
}

}  // namespace gcore
