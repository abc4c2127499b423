#include "coxdet/sn_counts.hpp"

#include <bit>
#include <stdexcept>

#include "coxdet/binmath.hpp"
#include "coxdet/towers.hpp"
#include "coxdet/type_b.hpp"

namespace coxdet::sn {

bool is_odd_partition(const Partition& p) {
  for (unsigned w : row_weights(build_tower(p)))
    if (w > 1) return false;
  return true;
}

DominoInfo domino_info(const Partition& p) {
  const CoreTower t = build_tower(p);
  const auto weights = row_weights(t);

  unsigned j = 0;
  for (unsigned i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 1) continue;
    if (weights[i] != 2 || i == 0 || j != 0) return {};
    j = i;
  }
  if (j == 0) return {};
  for (unsigned i = 1; i < j; ++i)
    if (weights[i] != 0) return {};

  // Row j must hold two single-cell labels, one per half of the row.
  const std::uint64_t half = std::uint64_t{1} << (j - 1);
  bool left = false, right = false;
  for (auto it = t.entries.lower_bound({j, 0});
       it != t.entries.end() && it->first.first == j; ++it) {
    if (it->second.size() != 1) return {};
    (it->first.second < half ? left : right) = true;
  }
  if (!left || !right) return {};
  return {true, j};
}

bool is_chiral(const Partition& p) {
  const unsigned n = p.size();
  if (n < 2) throw std::domain_error("is_chiral requires |p| >= 2");
  const CoreQuotient cq = core_quotient(p);
  const std::uint64_t a = cq.q0.size(), b = cq.q1.size();
  const unsigned k = ord_nprime(n);

  if (is_odd_partition(p)) {
    const std::uint64_t side = (n % 2 == 0) ? a : b;
    return (side >> (k - 1)) & 1;
  }
  if (cq.core.size() <= 1) {
    if (a == 0 || b == 0 || ord2(a) != ord2(b)) return false;
    return (a & b) == std::uint64_t{1} << ord2(a) &&
           is_odd_partition(cq.q0) && is_odd_partition(cq.q1);
  }
  if (cq.core == Partition{2, 1}) return is_odd_partition(from_quotient(cq.q0, cq.q1));
  return false;
}

BigInt odd_partition_count(unsigned n) { return pow2_alpha(n); }

BigInt chiral_partition_count(unsigned n) {
  if (n < 2) throw std::domain_error("chiral_partition_count requires n >= 2");
  BigInt total = odd_partition_count(n) / 2 + domino_tower_count(n);
  if (n % 2 == 1) total += odd_partition_count(n - 3);
  return total;
}

BigInt domino_tower_count(unsigned n, unsigned j) {
  if (n < 2 || j < 1 || j + 1 > ord_nprime(n))
    throw std::domain_error("domino row index out of range");
  return pow2(2 * (j - 1)) * pow2_alpha(n - (1u << (j + 1)));
}

BigInt domino_tower_count(unsigned n) {
  if (n < 2) return 0;
  return domino_tower_count_below(n, ord_nprime(n));
}

BigInt domino_tower_count_below(unsigned n, unsigned j) {
  BigInt total = 0;
  for (unsigned i = 1; i < j; ++i) total += domino_tower_count(n, i);
  return total;
}

std::map<ParityClass, BigInt> parity_class_counts(unsigned n) {
  if (n < 2) throw std::domain_error("parity_class_counts requires n >= 2");
  const BigInt odd = odd_partition_count(n);
  const BigInt chiral = chiral_partition_count(n);
  const BigInt half = odd / 2;
  std::map<ParityClass, BigInt> out;
  out[{1, 1}] = half;
  out[{1, 0}] = half;
  out[{0, 1}] = chiral - half;
  out[{0, 0}] = typeb::partition_count(n) - odd - chiral + half;
  return out;
}

namespace {

BigInt domino_or_zero(unsigned n) { return n < 2 ? BigInt(0) : domino_tower_count(n); }

}  // namespace

bool merge_identity_holds(unsigned a, unsigned b) {
  const unsigned n = a + b;
  if (is_neat(a, b)) {
    bool ok = odd_partition_count(n) == odd_partition_count(a) * odd_partition_count(b);
    if (n >= 2) {
      const unsigned k = ord_nprime(n);
      if ((b >> k) & 1)
        ok = ok && odd_partition_count(a) * domino_or_zero(b) == domino_or_zero(n);
    }
    return ok;
  }
  // The merging bijection behind the domino identity needs the shared bit
  // at a positive index (domino rows have j >= 1); for j = 0 both root rows
  // are occupied and the identity is false.
  if (a > 0 && b > 0 && ord2(a) == ord2(b) && ord2(a) >= 1 &&
      (std::uint64_t{a} & b) == std::uint64_t{1} << ord2(a)) {
    const unsigned j = ord2(a);
    const BigInt expected = domino_tower_count_below(n, j);
    return odd_partition_count(a) * domino_or_zero(b) == expected &&
           odd_partition_count(b) * domino_or_zero(a) == expected;
  }
  throw std::domain_error("pair is neither neat nor singly-overlapping");
}

}  // namespace coxdet::sn
