#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracles {

using coxdet::BigInt;
using coxdet::Partition;

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial_via_factorials(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt dim_branching(const Partition& p) {
  static std::map<std::vector<unsigned>, BigInt> memo;
  if (p.empty()) return 1;
  if (auto it = memo.find(p.parts()); it != memo.end()) return it->second;
  BigInt total = 0;
  for (unsigned i = 0; i < p.length(); ++i) {
    if (i + 1 < p.length() && p.parts()[i] == p.parts()[i + 1]) continue;  // not a corner
    std::vector<unsigned> rest = p.parts();
    if (--rest[i] == 0) rest.erase(rest.begin() + i);
    total += dim_branching(Partition(rest));
  }
  memo[p.parts()] = total;
  return total;
}

namespace {

// Rim-hook removal on beta numbers: subtracting the cycle length from one
// beta number (landing outside the set) removes one border strip; the sign
// is the parity of the beads jumped over.
long long mn_on_beta(std::vector<long long>& beta, const std::vector<unsigned>& cycles,
                     std::size_t next) {
  if (next == cycles.size()) return 1;
  const long long t = cycles[next];
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const long long target = beta[i] - t;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (long long b : beta)
      if (b > target && b < beta[i]) ++jumped;
    const long long saved = beta[i];
    beta[i] = target;
    const long long sub = mn_on_beta(beta, cycles, next + 1);
    beta[i] = saved;
    total += jumped % 2 ? -sub : sub;
  }
  return total;
}

}  // namespace

long long mn_character(const Partition& p, const std::vector<unsigned>& cycle_type) {
  unsigned total = 0;
  for (unsigned c : cycle_type) total += c;
  if (total != p.size()) throw std::invalid_argument("cycle type must partition |p|");
  std::vector<long long> beta(p.length());
  for (unsigned i = 0; i < p.length(); ++i)
    beta[i] = static_cast<long long>(p.parts()[i]) + (p.length() - 1 - i);
  std::vector<unsigned> cycles = cycle_type;
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  return mn_on_beta(beta, cycles, 0);
}

long long mn_transposition_character(const Partition& p) {
  if (p.size() < 2) throw std::invalid_argument("needs |p| >= 2");
  std::vector<unsigned> cycles(p.size() - 1, 1);
  cycles[0] = 2;
  return mn_character(p, cycles);
}

}  // namespace oracles
