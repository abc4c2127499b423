#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "coxdet/bigint.hpp"

namespace coxdet {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Immutable after construction; the empty sequence is the unique
/// partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);
  Partition(std::initializer_list<unsigned> parts);

  /// Parses "12,2,1,1"; the empty string and "0" both denote the empty
  /// partition. Throws std::invalid_argument naming the offending token.
  static Partition parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const { return size_; }              // |lambda|
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part at 0-based index i, 0 beyond the last row.
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;  // "12,2,1,1"; "" for the empty partition

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

Partition conjugate(const Partition& p);

/// True iff the partition has shape (a, 1^b): the empty partition and
/// one-row partitions count.
bool is_hook(const Partition& p);

/// True iff no hook length is even.
bool is_two_core(const Partition& p);

/// Dimension of the irreducible S_n module indexed by the partition,
/// by the hook length formula. Exact; dimension of the empty partition is 1.
BigInt specht_dim(const Partition& p);

/// Character value at a transposition, via the content identity
///   chi(s1) = dim * (sum_i C(p_i,2) - sum_j C(p'_j,2)) / C(n,2).
/// Requires |p| >= 2; the division is exact.
BigInt transposition_character(const Partition& p);

/// Multiplicity of eigenvalue -1 of the transposition's image,
/// (dim - chi(s1)) / 2. Requires |p| >= 2.
BigInt transposition_neg_multiplicity(const Partition& p);

/// Parity of transposition_neg_multiplicity; defined as 0 for |p| <= 1 so
/// the type B exponent formulas need no boundary cases.
int neg_mult_parity(const Partition& p);

enum class SnChar { triv, sgn };

std::string to_string(SnChar c);

/// Determinant of the irreducible S_n representation; requires |p| >= 2.
SnChar determinant(const Partition& p);

/// All partitions of n, largest-part-first order, deterministic.
std::vector<Partition> partitions_of(unsigned n);

}  // namespace coxdet
