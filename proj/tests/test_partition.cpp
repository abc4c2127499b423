#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "coxdet/partition.hpp"
#include "coxdet/type_b.hpp"
#include "oracles.hpp"

using namespace coxdet;

TEST_CASE("parse and format") {
  CHECK(Partition::parse("12,2,1,1") == Partition{12, 2, 1, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("0").empty());
  CHECK(Partition{12, 2, 1, 1}.to_string() == "12,2,1,1");
  CHECK(Partition{}.to_string() == "");

  CHECK_THROWS_WITH_AS(Partition::parse("1,x"), "bad partition token 'x'", std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
  CHECK_THROWS_AS(
      Partition::parse("999999999,999999999,999999999,999999999,999999999"),
      std::invalid_argument);  // total would wrap the cached 32-bit size

  for (unsigned n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) CHECK(Partition::parse(p.to_string()) == p);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{12, 2, 1, 1}) ==
        Partition{4, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  for (unsigned n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).size() == p.size());
    }
}

TEST_CASE("hooks") {
  CHECK(is_hook(Partition{5, 1, 1}));
  CHECK_FALSE(is_hook(Partition{3, 2}));
  CHECK(is_hook(Partition{1}));
  CHECK(is_hook(Partition{}));
  CHECK(is_hook(Partition{7}));
}

TEST_CASE("dimension via hook lengths") {
  CHECK(specht_dim(Partition{1, 1}) == 1);
  CHECK(specht_dim(Partition{2, 1}) == 2);
  CHECK(specht_dim(Partition{6}) == 1);
  CHECK(specht_dim(Partition{}) == 1);

  for (unsigned n = 0; n <= 15; ++n)
    for (const auto& p : partitions_of(n)) CHECK(specht_dim(p) == oracles::dim_branching(p));

  for (unsigned n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (const auto& p : partitions_of(n)) {
      const BigInt f = specht_dim(p);
      sum += f * f;
    }
    CHECK(sum == oracles::factorial(n));
  }
}

TEST_CASE("character at a transposition") {
  for (unsigned n = 2; n <= 8; ++n) CHECK(transposition_character(Partition{n}) == 1);
  CHECK(transposition_character(Partition{1, 1}) == -1);
  CHECK(transposition_character(Partition{2, 1}) == 0);
  CHECK(oracles::mn_transposition_character(Partition{2, 1}) == 0);
  CHECK_THROWS_AS(transposition_character(Partition{1}), std::domain_error);

  for (unsigned n = 2; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      const BigInt chi = transposition_character(p);
      CHECK(chi == oracles::mn_transposition_character(p));
      CHECK(abs(chi) <= specht_dim(p));
    }
}

TEST_CASE("negative eigenvalue multiplicity") {
  CHECK(neg_mult_parity(Partition{1, 1}) == 1);
  CHECK(neg_mult_parity(Partition{2}) == 0);
  CHECK(neg_mult_parity(Partition{2, 1}) == 1);
  CHECK(neg_mult_parity(Partition{}) == 0);
  CHECK(neg_mult_parity(Partition{1}) == 0);

  // conjugating adds the dimension
  for (unsigned n = 2; n <= 20; ++n)
    for (const auto& p : partitions_of(n)) {
      const int lhs = neg_mult_parity(conjugate(p));
      const int rhs = static_cast<int>((transposition_neg_multiplicity(p) + specht_dim(p)) & 1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("determinant of a symmetric group irreducible") {
  CHECK(determinant(Partition{1, 1, 1}) == SnChar::sgn);
  CHECK(determinant(Partition{3}) == SnChar::triv);
  CHECK_THROWS_AS(determinant(Partition{1}), std::domain_error);
  CHECK_THROWS_AS(determinant(Partition{}), std::domain_error);

  // expected value fixed from the Murnaghan-Nakayama oracle:
  // chi = 0, so the -1 eigenvalue has odd multiplicity
  CHECK(oracles::mn_transposition_character(Partition{2, 2}) == 0);
  CHECK(determinant(Partition{2, 2}) == SnChar::sgn);

  CHECK(to_string(SnChar::sgn) == "sgn");
  CHECK(to_string(SnChar::triv) == "triv");
}

TEST_CASE("partition generation matches the recurrence") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(10).size() == 42);
  for (unsigned n = 0; n <= 30; ++n)
    CHECK(typeb::partition_count(n) == partitions_of(n).size());
}
