#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "coxdet/bigint.hpp"
#include "coxdet/count_report.hpp"
#include "coxdet/partition.hpp"

namespace coxdet::typed {

// Irreducibles of the demihyperoctahedral group, via restriction from the
// full hyperoctahedral group: an unordered pair of distinct partitions
// (irreducible restriction), or a partition of n/2 with a sign tag (the
// two summands of a split restriction; both carry the same determinant).
struct TypeI {
  Partition first;
  Partition second;  // must differ from first; {first,second} is unordered
};

struct TypeII {
  Partition half;  // partition of n/2
  int sign = +1;   // +1 or -1; irrelevant to the determinant
};

using Irrep = std::variant<TypeI, TypeII>;

enum class DChar { triv, sgn };

std::string to_string(DChar c);

/// Determinant of an irreducible of rank n >= 4. TypeII requires n even.
DChar determinant(const Irrep& irrep, unsigned n);

/// Sign-exponent of a split (TypeII) summand from the exact character
/// route; the classification inside determinant() must agree with this.
int split_sgn_exponent(const Partition& half, unsigned n);

/// Closed count of irreducibles with determinant sgn, n >= 4: half the
/// type B sgn0+sgn1 total, corrected by n/2 when n is a power of two and
/// by n-2 when n-2 is.
BigInt sgn_count(unsigned n);

/// Total number of irreducibles, n >= 2.
BigInt irrep_count(unsigned n);

/// Oracle: walks unordered pairs and split restrictions, classifying each
/// via determinant().
BigInt sgn_count_enumerated(unsigned n);

/// Oracle for irrep_count: one per unordered pair of distinct partitions,
/// two per partition of n/2.
BigInt irrep_count_enumerated(unsigned n);

}  // namespace coxdet::typed

namespace coxdet::dihedral {

/// Counts for the dihedral group of order 2p. Two characters when p is
/// odd, four when p is even; p = 1 and 2 are accepted as the degenerate
/// abelian cases.
CountReport counts(unsigned p);

}  // namespace coxdet::dihedral

namespace coxdet::exceptional {

struct Entry {
  std::string_view name;
  long long triv;
  long long eps_w;
  long long omega1;  // -1 when the group has only two characters
  long long omega2;
};

std::span<const Entry> table();

/// Counts for H3, H4, E6, E7, E8, F4. Throws std::invalid_argument for
/// anything else.
CountReport counts(std::string_view name);

}  // namespace coxdet::exceptional
