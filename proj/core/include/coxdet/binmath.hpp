#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxdet/bigint.hpp"

namespace coxdet {

/// Largest j such that 2^j divides a. Throws std::domain_error for a = 0.
unsigned ord2(std::uint64_t a);

/// True iff adding a and b in binary produces no carry, i.e. the binary
/// digit sets of a and b are disjoint.
bool is_neat(std::uint64_t a, std::uint64_t b);

/// Parity of the multinomial coefficient n! / (a! b!). Returns 0 whenever
/// a + b != n or an index is negative (the vanishing-coefficient
/// convention; callers pass expressions like a-2 freely).
int binom_parity(long long n, long long a, long long b);

/// Exponent positions set in the binary expansion of n, ascending.
std::vector<unsigned> bin_set(std::uint64_t n);

/// Sum of the exponents in the binary expansion of n (a set bit at
/// position j contributes j, so the 1s bit contributes nothing).
unsigned alpha_exp(std::uint64_t n);

/// 2^alpha_exp(n). Equals the number of partitions of n whose Specht
/// dimension is odd; see sn::odd_partition_count.
BigInt pow2_alpha(std::uint64_t n);

/// ord2 of n with its 1s bit cleared; requires n >= 2. This is the
/// quantity written k throughout the closed counting formulas.
unsigned ord_nprime(std::uint64_t n);

/// Exact binomial coefficient; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Binary profile of a nonnegative integer: n = eps + sum of 2^j over
// bin_set \ {0}, nu = popcount, k = ord2(n - eps) when n - eps > 0.
struct BinProfile {
  std::uint64_t n = 0;
  int eps = 0;
  std::vector<unsigned> bin;
  unsigned nu = 0;
  std::optional<unsigned> k;
};

BinProfile bin_profile(std::uint64_t n);

}  // namespace coxdet
