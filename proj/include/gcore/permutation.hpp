#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcore/entangled.hpp"

// Control keys and the order-rearrangement encryption itself: the
// permutation families over carrier-unit positions, their switch/delay
// schedules, and apply/undo.

namespace gcore {

// Bijection on positions {1..size}; mapping is stored 0-based internally
// but the public table view is 1-indexed like the usual two-line notation.
struct PermutationOp {
  std::vector<int> mapping;  // mapping[i] = image of position i (0-based)

  explicit PermutationOp(std::vector<int> m);
  int size() const { return static_cast<int>(mapping.size()); }
  int operator()(int i) const { return mapping.at(i); }
  PermutationOp inverse() const;
  PermutationOp compose(const PermutationOp& then) const;  // this, then `then`
  bool is_identity() const;
  std::vector<int> table_1indexed() const;
};

// The eight qubit operations E_0..E_7, stored verbatim from the listing
// (note E_5 is position-XOR by 7 and E_7 by 5; the tables are canon).
PermutationOp qubit_permutation(int k);

// E_k for a (d, N) family: the verbatim qubit tables for (2,3), the
// cyclic shift by k otherwise.
PermutationOp general_permutation(int d, int particles, int k);

// Output position perm(i) holds input item i.
template <typename T>
std::vector<T> apply_rearrangement(const std::vector<T>& unit,
                                   const PermutationOp& perm) {
  if (static_cast<int>(unit.size()) != perm.size())
    throw std::invalid_argument("unit length does not match permutation size");
  std::vector<T> out(unit.size());
  for (int i = 0; i < perm.size(); ++i) out[perm(i)] = unit[i];
  return out;
}

template <typename T>
std::vector<T> invert_rearrangement(const std::vector<T>& unit,
                                    const PermutationOp& perm) {
  return apply_rearrangement(unit, perm.inverse());
}

// Integer-slot delay-line program realizing one permutation on one lane.
struct LaneProgram {
  struct Entry {
    int particle;        // original temporal position, 0-based
    int departure_slot;  // 0-based slot of emission
    int delay;           // slots spent in the delay line
  };
  std::vector<Entry> entries;  // one per particle, in arrival order
};

// One program per lane.  Lane 0 passes particles through untouched; the
// control key rearranges the remaining lanes.
struct SwitchSchedule {
  int lanes = 0;
  int base_delay = 0;  // pipeline offset keeping all delays nonnegative
  std::vector<LaneProgram> programs;
};

SwitchSchedule switch_schedule(const PermutationOp& perm, int lanes, int d);

// Emission order of one lane program (discrete-event execution).
template <typename T>
std::vector<T> execute_lane(const std::vector<T>& items, const LaneProgram& prog) {
  if (items.size() != prog.entries.size())
    throw std::invalid_argument("item count does not match lane program");
  std::vector<T> out(items.size());
  for (size_t i = 0; i < items.size(); ++i)
    out.at(prog.entries[i].departure_slot) = items[prog.entries[i].particle];
  return out;
}

// Pre-shared base-d digit string; reused cyclically when exhausted.
struct ControlKey {
  int base = 2;
  std::vector<int> digits;
  int group_size = 1;  // consecutive units governed by one key block

  ControlKey(int d, std::vector<int> dig, int group = 1);
  static ControlKey from_string(int d, const std::string& s, int group = 1);
  std::string to_string() const;
};

// Stateful iterator: consumes N digits per block, emits the matching
// GCORE operation, repeats each one group_size times, recycles the key.
class KeyBlockStream {
 public:
  KeyBlockStream(ControlKey key, int particles);
  PermutationOp next();
  int next_block_value();  // peek-free scalar form used for transcripts

 private:
  ControlKey key_;
  int particles_;
  size_t cursor_ = 0;
  int remaining_in_group_ = 0;
  int current_block_ = 0;
};

// 1-indexed mapping rows for every E_k of the family, for audit dumps.
std::vector<std::vector<int>> permutation_tables(int d, int particles);

}  // namespace gcore
