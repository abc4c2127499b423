#pragma once

#include <map>
#include <string>

#include "coxdet/bigint.hpp"
#include "coxdet/partition.hpp"

namespace coxdet::typeb {

/// Ordered pair of partitions indexing an irreducible representation of
/// the hyperoctahedral group of rank a + b. Order matters.
struct Bipartition {
  Partition alpha;
  Partition beta;

  unsigned a() const { return alpha.size(); }
  unsigned b() const { return beta.size(); }
  unsigned n() const { return alpha.size() + beta.size(); }

  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// The four multiplicative characters; eps * sgn0 = sgn1.
enum class BChar { triv, eps, sgn0, sgn1 };

std::string to_string(BChar c);
BChar operator*(BChar lhs, BChar rhs);  // Klein four-group product

inline constexpr BChar kAllChars[] = {BChar::triv, BChar::eps, BChar::sgn0, BChar::sgn1};

/// Exponent of eps in the determinant:
///   x = f_alpha f_beta binom(n-1; a, b-1) mod 2.
int eps_exponent(const Bipartition& bp);

/// Exponent of sgn0 in the determinant:
///   y = f f' binom(n-2; a-1, b-1) + f' g binom(n-2; a-2, b)
///       + f g' binom(n-2; a, b-2) mod 2,
/// with out-of-range multinomials vanishing.
int sgn0_exponent(const Bipartition& bp);

/// Determinant of the irreducible representation, from the two exponents.
BChar determinant(const Bipartition& bp);

/// Same determinant by the independent route: exact induced dimension and
/// character values at the two reflection classes, reduced mod 2.
/// Requires n >= 2.
BChar determinant_via_characters(const Bipartition& bp);

/// Componentwise conjugation; an involution that preserves the eps
/// exponent and flips the sgn0 exponent by the dimension parity.
Bipartition conjugate(const Bipartition& bp);

/// Count of pairs over partitions of a times partitions of b with the
/// given determinant, by the closed case analysis on binomial parities.
/// Falls back to direct enumeration for a + b <= 1 where the closed cases
/// do not apply.
BigInt count_by_sizes(BChar omega, unsigned a, unsigned b);

/// Closed-formula count over all bipartitions of n (triv by subtraction
/// from the bipartition number). n = 0 and 1 are served by enumeration.
BigInt count_closed(BChar omega, unsigned n);

/// Ground-truth count: iterates every bipartition of n and classifies it
/// via determinant().
BigInt count_enumerated(BChar omega, unsigned n);

std::map<BChar, BigInt> counts_closed(unsigned n);
std::map<BChar, BigInt> counts_enumerated(unsigned n);

/// Strict ordering of the four closed counts:
///   n odd:  eps = sgn1 < sgn0 < triv,
///   n even: eps = sgn0 < sgn1 < triv.
/// Requires n >= 10.
bool inequality_chain_holds(unsigned n);

/// Number of partitions of n (pentagonal-number recurrence, memoized;
/// thread safe).
BigInt partition_count(unsigned n);

/// Number of bipartitions of n.
BigInt bipartition_count(unsigned n);

}  // namespace coxdet::typeb
