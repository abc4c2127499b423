#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "coxdet/binmath.hpp"
#include "oracles.hpp"

using namespace coxdet;

TEST_CASE("ord2 basics") {
  CHECK(ord2(12) == 2);
  CHECK(ord2(1) == 0);
  CHECK(ord2(96) == 5);
  CHECK_THROWS_AS(ord2(0), std::domain_error);

  // repeated-halving oracle
  for (std::uint64_t a = 1; a <= 512; ++a) {
    unsigned halvings = 0;
    for (std::uint64_t v = a; v % 2 == 0; v /= 2) ++halvings;
    CHECK(ord2(a) == halvings);
  }
}

TEST_CASE("neat sums") {
  CHECK(is_neat(4, 2));
  CHECK_FALSE(is_neat(3, 1));
  for (std::uint64_t a = 0; a <= 64; ++a) CHECK(is_neat(a, 0));
}

TEST_CASE("multinomial parity agrees with the exact binomial") {
  CHECK(binom_parity(6, 2, 4) == 1);   // C(6,2) = 15
  CHECK(binom_parity(4, 1, 3) == 0);   // C(4,1) = 4
  CHECK(binom_parity(5, -1, 6) == 0);  // vanishing convention
  CHECK(binom_parity(5, 2, 2) == 0);   // a + b != n

  for (unsigned a = 0; a <= 200; ++a)
    for (unsigned b = 0; b <= 200; ++b) {
      const int parity = binom_parity(a + b, a, b);
      CHECK(parity == (is_neat(a, b) ? 1 : 0));
      CHECK(parity == static_cast<int>(oracles::binomial_via_factorials(a + b, a) & 1));
    }
}

TEST_CASE("exact binomial helper") {
  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n + 2; ++k)
      CHECK(binomial(n, k) == oracles::binomial_via_factorials(n, k));
}

TEST_CASE("alpha exponent") {
  CHECK(alpha_exp(6) == 3);
  CHECK(alpha_exp(0) == 0);
  CHECK(alpha_exp(1) == 0);
  for (unsigned k = 0; k <= 20; ++k) CHECK(alpha_exp(1ull << k) == k);
}

TEST_CASE("pow2_alpha values") {
  CHECK(pow2_alpha(6) == 8);
  CHECK(pow2_alpha(12) == 32);
  CHECK(pow2_alpha(1) == 1);
  for (unsigned k = 0; k <= 16; ++k) CHECK(pow2_alpha(1ull << k) == (1ull << k));
}

TEST_CASE("increment lemmas for the odd count") {
  // neat multiplicativity
  for (std::uint64_t x = 0; x <= 200; ++x)
    for (std::uint64_t y = 0; x + y <= 200; ++y)
      if (is_neat(x, y)) CHECK(pow2_alpha(x + y) == pow2_alpha(x) * pow2_alpha(y));

  for (std::uint64_t n = 1; n <= 201; n += 2) CHECK(pow2_alpha(n - 1) == pow2_alpha(n));

  // A(n - 2^j) * 2^(k + C(j,2)) = A(n) * 2^(C(k,2)) for 0 <= j <= k.
  // For odd n the j = 0 case subtracts the parity bit instead of touching
  // the even part, where the previous identity A(n-1) = A(n) applies, so
  // the increment identity starts at j = 1 there.
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const unsigned k = ord_nprime(n);
    for (unsigned j = n % 2; j <= k; ++j)
      CHECK(pow2_alpha(n - (1ull << j)) * pow2(k + j * (j - 1) / 2) ==
            pow2_alpha(n) * pow2(k * (k - 1) / 2));
  }

  for (std::uint64_t n = 0; n <= 200; ++n)
    CHECK(pow2_alpha(2 * n) == pow2(static_cast<unsigned>(std::popcount(n))) * pow2_alpha(n));
}

TEST_CASE("popcount after subtracting a low power of two") {
  // same domain note as the increment identity: odd n starts at j = 1
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const unsigned k = ord_nprime(n);
    for (unsigned j = n % 2; j <= k; ++j)
      CHECK(std::popcount(n - (1ull << j)) == std::popcount(n) + k - j - 1);
    if (n % 2 == 1) CHECK(std::popcount(n - 1) == std::popcount(n) - 1);
  }
}

TEST_CASE("growth bounds") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const unsigned a = alpha_exp(n);
    CHECK(pow2(a + 1) > n);  // n/2 < A(n)
    const double lg = std::log2(static_cast<double>(n));
    CHECK(static_cast<double>(a) <= lg * (lg + 1) / 2 + 1e-9);
  }
}

TEST_CASE("binary profile") {
  for (std::uint64_t n = 0; n <= 1000; ++n) {
    const BinProfile p = bin_profile(n);
    std::uint64_t rebuilt = 0;
    for (unsigned j : p.bin) rebuilt += 1ull << j;
    CHECK(rebuilt == n);
    CHECK(p.nu == p.bin.size());
    CHECK(p.eps == static_cast<int>(n & 1));
    if (n >= 2) {
      REQUIRE(p.k.has_value());
      CHECK(*p.k == ord2(n - (n & 1)));
      // k is the smallest positive exponent present
      for (unsigned j : p.bin)
        if (j > 0) {
          CHECK(*p.k == j);
          break;
        }
    } else {
      CHECK_FALSE(p.k.has_value());
    }
  }
}
