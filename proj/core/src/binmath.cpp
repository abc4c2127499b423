#include "coxdet/binmath.hpp"

#include <bit>
#include <stdexcept>

namespace coxdet {

unsigned ord2(std::uint64_t a) {
  if (a == 0) throw std::domain_error("ord2(0) is undefined");
  return static_cast<unsigned>(std::countr_zero(a));
}

bool is_neat(std::uint64_t a, std::uint64_t b) { return (a & b) == 0; }

int binom_parity(long long n, long long a, long long b) {
  if (a < 0 || b < 0 || a + b != n) return 0;
  // Kummer: the 2-adic valuation of n!/(a!b!) is the number of carries when
  // adding a and b in binary, so the coefficient is odd iff the sum is neat.
  return is_neat(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) ? 1 : 0;
}

std::vector<unsigned> bin_set(std::uint64_t n) {
  std::vector<unsigned> out;
  for (unsigned j = 0; n != 0; ++j, n >>= 1)
    if (n & 1) out.push_back(j);
  return out;
}

unsigned alpha_exp(std::uint64_t n) {
  unsigned sum = 0;
  for (unsigned j = 0; n != 0; ++j, n >>= 1)
    if (n & 1) sum += j;
  return sum;
}

BigInt pow2_alpha(std::uint64_t n) { return pow2(alpha_exp(n)); }

unsigned ord_nprime(std::uint64_t n) {
  if (n < 2) throw std::domain_error("ord_nprime requires n >= 2");
  return ord2(n & ~std::uint64_t{1});
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BinProfile bin_profile(std::uint64_t n) {
  BinProfile p;
  p.n = n;
  p.eps = static_cast<int>(n & 1);
  p.bin = bin_set(n);
  p.nu = static_cast<unsigned>(std::popcount(n));
  if (n >= 2) p.k = ord_nprime(n);
  return p;
}

}  // namespace coxdet
