#include "gcore/permutation.hpp"

#include <algorithm>

namespace gcore {

PermutationOp::PermutationOp(std::vector<int> m) : mapping(std::move(m)) {
  if (mapping.empty()) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(mapping.size(), false);
  for (int v : mapping) {
    if (v < 0 || v >= static_cast<int>(mapping.size()) || seen[v])
      throw std::invalid_argument("mapping is not a bijection");
    seen[v] = true;
  }
}

PermutationOp PermutationOp::inverse() const {
  std::vector<int> inv(mapping.size());
  for (int i = 0; i < size(); ++i) inv[mapping[i]] = i;
  return PermutationOp(std::move(inv));
}

PermutationOp PermutationOp::compose(const PermutationOp& then) const {
  if (then.size() != size())
    throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> out(mapping.size());
  for (int i = 0; i < size(); ++i) out[i] = then.mapping[mapping[i]];
  return PermutationOp(std::move(out));
}

bool PermutationOp::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (mapping[i] != i) return false;
  return true;
}

std::vector<int> PermutationOp::table_1indexed() const {
  std::vector<int> t(mapping.size());
  for (int i = 0; i < size(); ++i) t[i] = mapping[i] + 1;
  return t;
}

PermutationOp qubit_permutation(int k) {
  // verbatim two-line tables for E_0..E_7 (1-indexed in the listing)
  static const int tables[8][8] = {
      {1, 2, 3, 4, 5, 6, 7, 8},
      {2, 1, 4, 3, 6, 5, 8, 7},
      {3, 4, 1, 2, 7, 8, 5, 6},
      {4, 3, 2, 1, 8, 7, 6, 5},
      {5, 6, 7, 8, 1, 2, 3, 4},
      {8, 7, 6, 5, 4, 3, 2, 1},
      {7, 8, 5, 6, 3, 4, 1, 2},
      {6, 5, 8, 7, 2, 1, 4, 3},
  };
  if (k < 0 || k > 7) throw std::invalid_argument("qubit permutation index 0..7");
  std::vector<int> m(8);
  for (int i = 0; i < 8; ++i) m[i] = tables[k][i] - 1;
  return PermutationOp(std::move(m));
}

PermutationOp general_permutation(int d, int particles, int k) {
  Family fam(particles, d);  // validates d, N and the size cap
  int size = fam.size();
  if (k < 0 || k >= size)
    throw std::invalid_argument("permutation index out of range for family");
  if (d == 2 && particles == 3) return qubit_permutation(k);
  std::vector<int> m(size);
  for (int i = 0; i < size; ++i) m[i] = (i + k) % size;
  return PermutationOp(std::move(m));
}

SwitchSchedule switch_schedule(const PermutationOp& perm, int lanes, int d) {
  if (lanes < 2) throw std::invalid_argument("need at least two lanes");
  SwitchSchedule sched;
  sched.lanes = lanes;
  // base offset: smallest pipeline latency keeping every delay >= 0
  int base = 0;
  for (int i = 0; i < perm.size(); ++i) base = std::max(base, i - perm(i));
  sched.base_delay = base;

  LaneProgram pass_through;
  for (int i = 0; i < perm.size(); ++i)
    pass_through.entries.push_back({i, i, 0});
  LaneProgram rearranged;
  for (int i = 0; i < perm.size(); ++i)
    rearranged.entries.push_back({i, perm(i), perm(i) - i + base});

  sched.programs.push_back(pass_through);
  for (int l = 1; l < lanes; ++l) sched.programs.push_back(rearranged);
  return sched;
}

ControlKey::ControlKey(int d, std::vector<int> dig, int group)
    : base(d), digits(std::move(dig)), group_size(group) {
  if (d < 2) throw std::invalid_argument("control key base must be >= 2");
  if (digits.empty()) throw std::invalid_argument("control key digits empty");
  if (group < 1) throw std::invalid_argument("group_size must be positive");
  for (int v : digits)
    if (v < 0 || v >= d) throw std::invalid_argument("key digit out of range");
}

ControlKey ControlKey::from_string(int d, const std::string& s, int group) {
  std::vector<int> dig;
  dig.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("key digits must be 0-9");
    dig.push_back(c - '0');
  }
  return ControlKey(d, std::move(dig), group);
}

std::string ControlKey::to_string() const {
  std::string s;
  for (int v : digits) s.push_back(static_cast<char>('0' + v));
  return s;
}

KeyBlockStream::KeyBlockStream(ControlKey key, int particles)
    : key_(std::move(key)), particles_(particles) {
  if (particles_ < 2) throw std::invalid_argument("need N >= 2 digits per block");
}

int KeyBlockStream::next_block_value() {
  if (remaining_in_group_ == 0) {
    int v = 0;
    for (int i = 0; i < particles_; ++i) {
      v = v * key_.base + key_.digits[cursor_];
      cursor_ = (cursor_ + 1) % key_.digits.size();  // key recycles
    }
    current_block_ = v;
    remaining_in_group_ = key_.group_size;
  }
  --remaining_in_group_;
  return current_block_;
}

PermutationOp KeyBlockStream::next() {
  return general_permutation(key_.base, particles_, next_block_value());
}

std::vector<std::vector<int>> permutation_tables(int d, int particles) {
  Family fam(particles, d);
  std::vector<std::vector<int>> out;
  out.reserve(fam.size());
  for (int k = 0; k < fam.size(); ++k)
    out.push_back(general_permutation(d, particles, k).table_1indexed());
  return out;
}

}  // namespace gcore
