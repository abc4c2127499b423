#pragma once

#include <compare>
#include <map>

#include "coxdet/bigint.hpp"
#include "coxdet/partition.hpp"

namespace coxdet::sn {

/// Macdonald's criterion: every row of the 2-core tower holds at most one
/// cell. Agrees with the parity of specht_dim.
bool is_odd_partition(const Partition& p);

// Tower shape with exactly two cells in row j (one per half), at most one
// cell elsewhere, rows 1..j-1 empty, root label empty or a single cell.
struct DominoInfo {
  bool is_domino = false;
  unsigned row = 0;  // the j above; meaningful only when is_domino
};

DominoInfo domino_info(const Partition& p);

/// Tower classification of the partitions whose S_n representation has
/// determinant sgn. Requires |p| >= 2. Agrees with neg_mult_parity == 1.
bool is_chiral(const Partition& p);

/// Number of odd partitions of n: 2^alpha_exp(n).
BigInt odd_partition_count(unsigned n);

/// Number of chiral partitions of n; requires n >= 2.
BigInt chiral_partition_count(unsigned n);

/// Number of j-domino towers of size n: 4^(j-1) * odd_partition_count(n - 2^(j+1)).
/// Requires 1 <= j <= ord_nprime(n) - 1.
BigInt domino_tower_count(unsigned n, unsigned j);

/// All domino towers of size n (0 for n < 2).
BigInt domino_tower_count(unsigned n);

/// Sum of domino_tower_count(n, i) over 1 <= i < j.
BigInt domino_tower_count_below(unsigned n, unsigned j);

struct ParityClass {
  int f_parity = 0;
  int g_parity = 0;
  friend auto operator<=>(const ParityClass&, const ParityClass&) = default;
};

/// Counts partitions of n by the joint parity of (dim, neg multiplicity);
/// requires n >= 2. The four counts sum to the partition number.
std::map<ParityClass, BigInt> parity_class_counts(unsigned n);

/// Checks the tower-merging counting identities for the pair (a, b) with
/// n = a + b:
///   neat sum:                       A(n) = A(a) A(b),
///   neat sum with k in bin(b):      A(a) D(b) = D(n),
///   single shared bit j = ord both: A(a) D(b) = D_<j(n),
/// where A and D are the odd and domino counts and k = ord_nprime(n).
/// Throws std::domain_error when neither condition applies.
bool merge_identity_holds(unsigned a, unsigned b);

}  // namespace coxdet::sn
