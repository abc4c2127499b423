#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxdet/partition.hpp"

namespace coxdet {

// 2-core and ordered 2-quotient of a partition. Satisfies
// |lambda| = |core| + 2(|q0| + |q1|).
struct CoreQuotient {
  Partition core;
  Partition q0;
  Partition q1;
};

/// Decomposes via the 2-runner abacus on a beta-set of even cardinality
/// (first-column hook lengths, padded with one extra bead when the part
/// count is odd); runner r holds the beta numbers congruent to r mod 2.
CoreQuotient core_quotient(const Partition& p);

/// Inverse of core_quotient. Throws std::domain_error unless core is a
/// 2-core.
Partition from_core_quotient(const Partition& core, const Partition& q0, const Partition& q1);

/// The unique partition of 2(|q0|+|q1|) with empty 2-core and 2-quotient
/// (q0, q1).
Partition from_quotient(const Partition& q0, const Partition& q1);

/// Sparse 2-core tower: row i holds 2^i nodes addressed by i-bit
/// positions; only nonempty 2-core labels are stored.
struct CoreTower {
  std::map<std::pair<unsigned, std::uint64_t>, Partition> entries;

  bool empty() const { return entries.empty(); }
  unsigned max_row() const;
  bool row_empty(unsigned i) const;

  friend bool operator==(const CoreTower&, const CoreTower&) = default;
};

/// Position rendered as a bit string of length row ("" for the root).
std::string position_bits(unsigned row, std::uint64_t pos);

/// Iterates the core/quotient decomposition down the binary tree.
CoreTower build_tower(const Partition& p);

/// Reconstructs the partition a tower came from; inverse of build_tower.
/// Throws std::domain_error if a stored label is not a 2-core.
Partition expand_tower(const CoreTower& t);

/// w_i = total number of cells in row i, trailing zeros trimmed. Satisfies
/// sum_i w_i 2^i = |expand_tower(t)|.
std::vector<unsigned> row_weights(const CoreTower& t);

/// Partition of |p| + |q| whose tower takes each row from whichever of the
/// two towers is nonempty there. Throws std::invalid_argument when some row
/// is nonempty in both.
Partition merge_towers(const Partition& p, const Partition& q);

// JSON wire format:
//   {"rows":[{"i":2,"entries":[{"pos":"00","core":"1"}, ...]}, ...]}
// rows ascending, positions in lexicographic order.
std::string tower_to_json(const CoreTower& t);
CoreTower tower_from_json(std::string_view text);

/// Rows top-down, one line per row up to the last populated one; empty
/// nodes drawn as '.', labels as "(2,1)".
std::string tower_to_ascii(const CoreTower& t);

}  // namespace coxdet
