#pragma once

// Test-only oracles, independent of the library's computation paths:
// factorial-based binomials, the branching-rule dimension recursion, and a
// direct Murnaghan-Nakayama evaluation on beta numbers.

#include <vector>

#include "coxdet/bigint.hpp"
#include "coxdet/partition.hpp"

namespace oracles {

coxdet::BigInt factorial(unsigned n);

/// n! / (k! (n-k)!), computed from factorials; 0 when k > n.
coxdet::BigInt binomial_via_factorials(unsigned n, unsigned k);

/// Specht dimension by the branching rule f(p) = sum over removable
/// corners, memoized.
coxdet::BigInt dim_branching(const coxdet::Partition& p);

/// Full Murnaghan-Nakayama evaluation of the character at the given cycle
/// type (a partition of |p|).
long long mn_character(const coxdet::Partition& p, const std::vector<unsigned>& cycle_type);

/// Character at a transposition: mn_character at cycle type (2, 1^(n-2)).
long long mn_transposition_character(const coxdet::Partition& p);

}  // namespace oracles
