#include "coxdet/other_types.hpp"

#include <bit>
#include <stdexcept>

#include "coxdet/binmath.hpp"
#include "coxdet/type_b.hpp"

namespace coxdet::typed {

std::string to_string(DChar c) { return c == DChar::triv ? "triv" : "sgn"; }

namespace {

bool is_pow2(unsigned n) { return std::has_single_bit(n); }

BigInt div_exact(BigInt v, unsigned d) {
  if (v % d != 0) throw std::logic_error("count is not divisible");
  return v / d;
}

int neg_mult_parity_or_zero(const Partition& p) {
  return p.size() < 2 ? 0 : neg_mult_parity(p);
}

}  // namespace

int split_sgn_exponent(const Partition& half, unsigned n) {
  if (n % 2 != 0 || half.size() != n / 2)
    throw std::domain_error("split restriction needs |half| = n/2, n even");
  const unsigned a = n / 2;
  const BigInt f = specht_dim(half);
  const BigInt g = half.size() < 2 ? BigInt(0) : transposition_neg_multiplicity(half);
  // 4x = binom(n;a,a) f^2 - 2 binom(n-2;a-2,a) f^2 + 4 binom(n-2;a,a-2) f g
  BigInt four_x = binomial(n, a) * f * f + 4 * binomial(n - 2, a) * f * g;
  if (a >= 2) four_x -= 2 * binomial(n - 2, a - 2) * f * f;
  return static_cast<int>(div_exact(std::move(four_x), 4) & 1);
}

DChar determinant(const Irrep& irrep, unsigned n) {
  if (n < 4) throw std::domain_error("determinant of type D irreps requires n >= 4");
  if (const auto* pair = std::get_if<TypeI>(&irrep)) {
    if (pair->first == pair->second)
      throw std::domain_error("TypeI requires distinct partitions");
    if (pair->first.size() + pair->second.size() != n)
      throw std::domain_error("TypeI sizes must sum to n");
    return typeb::sgn0_exponent({pair->first, pair->second}) ? DChar::sgn : DChar::triv;
  }
  const auto& split = std::get<TypeII>(irrep);
  if (n % 2 != 0) throw std::domain_error("TypeII requires n even");
  if (split.half.size() != n / 2) throw std::domain_error("TypeII requires |half| = n/2");
  if (n == 4)  // below the classification's range; use the character route
    return split_sgn_exponent(split.half, n) ? DChar::sgn : DChar::triv;
  const int f_par = static_cast<int>(specht_dim(split.half) & 1);
  if (is_pow2(n))
    return f_par && neg_mult_parity_or_zero(split.half) ? DChar::sgn : DChar::triv;
  if (is_pow2(n - 2)) return f_par ? DChar::sgn : DChar::triv;
  return DChar::triv;
}

BigInt sgn_count(unsigned n) {
  if (n < 4) throw std::domain_error("sgn_count requires n >= 4");
  BigInt total = div_exact(
      typeb::count_closed(typeb::BChar::sgn0, n) + typeb::count_closed(typeb::BChar::sgn1, n), 2);
  if (n % 2 == 0) {
    if (is_pow2(n)) total += n / 2;
    else if (is_pow2(n - 2)) total += n - 2;
  }
  return total;
}

BigInt irrep_count(unsigned n) {
  if (n < 2) throw std::domain_error("irrep_count requires n >= 2");
  if (n % 2 == 1) return div_exact(typeb::bipartition_count(n), 2);
  return div_exact(typeb::bipartition_count(n) + 3 * typeb::partition_count(n / 2), 2);
}

BigInt sgn_count_enumerated(unsigned n) {
  if (n < 4) throw std::domain_error("sgn_count_enumerated requires n >= 4");
  BigInt ordered = 0;
  for (unsigned a = 0; a <= n; ++a)
    for (const auto& alpha : partitions_of(a))
      for (const auto& beta : partitions_of(n - a)) {
        if (alpha == beta) continue;
        if (determinant(TypeI{alpha, beta}, n) == DChar::sgn) ++ordered;
      }
  BigInt total = div_exact(std::move(ordered), 2);
  if (n % 2 == 0)
    for (const auto& half : partitions_of(n / 2))
      if (determinant(TypeII{half, +1}, n) == DChar::sgn) total += 2;
  return total;
}

BigInt irrep_count_enumerated(unsigned n) {
  if (n < 2) throw std::domain_error("irrep_count_enumerated requires n >= 2");
  BigInt ordered = 0;
  for (unsigned a = 0; a <= n; ++a)
    for (const auto& alpha : partitions_of(a))
      for (const auto& beta : partitions_of(n - a))
        if (alpha != beta) ++ordered;
  BigInt total = div_exact(std::move(ordered), 2);
  if (n % 2 == 0)
    for ([[maybe_unused]] const auto& half : partitions_of(n / 2)) total += 2;
  return total;
}

}  // namespace coxdet::typed

namespace coxdet::dihedral {

CountReport counts(unsigned p) {
  if (p < 1) throw std::domain_error("dihedral parameter must be positive");
  CountReport report;
  report.group = "I2";
  report.n = p;
  report.method = "closed";
  if (p % 2 == 1) {
    report.counts["triv"] = 1;
    report.counts["eps_W"] = (p + 1) / 2;
  } else {
    report.counts["triv"] = 1;
    report.counts["omega1"] = 1;
    report.counts["omega2"] = 1;
    report.counts["eps_W"] = p / 2;
  }
  return report;
}

}  // namespace coxdet::dihedral

namespace coxdet::exceptional {

namespace {

constexpr Entry kTable[] = {
    {"H3", 6, 4, -1, -1},
    {"H4", 19, 15, -1, -1},
    {"E6", 13, 12, -1, -1},
    {"E7", 44, 16, -1, -1},
    {"E8", 63, 49, -1, -1},
    {"F4", 9, 8, 4, 4},
};

}  // namespace

std::span<const Entry> table() { return kTable; }

CountReport counts(std::string_view name) {
  for (const Entry& e : kTable) {
    if (e.name != name) continue;
    CountReport report;
    report.group = std::string(name);
    report.method = "closed";
    report.counts["triv"] = e.triv;
    report.counts["eps_W"] = e.eps_w;
    if (e.omega1 >= 0) {
      report.counts["omega1"] = e.omega1;
      report.counts["omega2"] = e.omega2;
    }
    return report;
  }
  throw std::invalid_argument("unknown exceptional type '" + std::string(name) + "'");
}

}  // namespace coxdet::exceptional
