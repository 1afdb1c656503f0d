#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/enumeration.hpp"
#include "semiring_lab/iso.hpp"

using namespace semiring_lab;

TEST_CASE("generated congruence of (1,2) on B3 is the two-block partition") {
  auto b3 = chain_semiring_b3();
  auto c = generated_congruence(semiring_view(*b3), {{1, 2}});
  CHECK(c.block_of == std::vector<Elem>{0, 1, 1});
  CHECK(c.num_blocks() == 2);
}

TEST_CASE("empty generators give the diagonal, 0~1 on B the universal") {
  auto b = boolean_semifield();
  CHECK(generated_congruence(semiring_view(*b), {}).is_diagonal());
  CHECK(generated_congruence(semiring_view(*b), {{0, 1}}).is_universal());
}

TEST_CASE("all_congruences counts on the catalog") {
  auto b3 = chain_semiring_b3();
  CHECK(all_congruences(*b3, CongruenceKind::Semiring).congruences.size() == 3);
  CHECK(all_congruences(*regular_semimodule(b3)).congruences.size() == 3);
  auto b = boolean_semifield();
  CHECK(all_congruences(*b, CongruenceKind::Semiring).congruences.size() == 2);
  CHECK(all_congruences(*b, CongruenceKind::Semimodule).congruences.size() == 2);
}

TEST_CASE("congruence sets contain the bounds and are join-closed") {
  for (const char* id : {"B3", "B31", "Z4", "Ext Z2", "Z6"}) {
    auto s = construct(id);
    auto set = all_congruences(*s, CongruenceKind::Semiring);
    REQUIRE(set.complete);
    auto find = [&](const Congruence& c) {
      return std::find_if(set.congruences.begin(), set.congruences.end(),
                          [&](const Congruence& d) {
                            return d.block_of == c.block_of;
                          }) != set.congruences.end();
    };
    CHECK(find(diagonal_congruence(s->size, CongruenceKind::Semiring)));
    CHECK(find(universal_congruence(s->size, CongruenceKind::Semiring)));
    for (const auto& a : set.congruences)
      for (const auto& b : set.congruences) CHECK(find(join(a, b)));
  }
}

TEST_CASE("all_congruences matches the all-partitions oracle on small carriers") {
  for (const char* id : {"B", "B3", "B31", "Z4", "Ext Z2", "Zn 5"}) {
    auto s = construct(id);
    REQUIRE(s->size <= 5);
    for (auto kind : {CongruenceKind::Semiring, CongruenceKind::Semimodule}) {
      auto expected = oracles::congruences_by_partition_scan(*s, kind);
      auto got = all_congruences(*s, kind);
      std::set<std::vector<Elem>> got_set;
      for (const auto& c : got.congruences) got_set.insert(c.block_of);
      CAPTURE(id);
      CHECK(got_set == expected);
    }
  }
}

TEST_CASE("Bourne congruences of named subsemimodules") {
  auto b3 = chain_semiring_b3();
  auto reg = regular_semimodule(b3);
  ElementSubset zero_only{{true, false, false}};
  CHECK(bourne_congruence(*reg, zero_only).is_diagonal());
  ElementSubset upper{{true, false, true}};
  CHECK(bourne_congruence(*reg, upper).is_universal());
  auto z4 = zn(4);
  auto regz = regular_semimodule(z4);
  ElementSubset even{{true, false, true, false}};
  auto c = bourne_congruence(*regz, even);
  CHECK(c.block_of == std::vector<Elem>{0, 1, 0, 1});
  ElementSubset bad{{true, true, false, false}};
  CHECK_THROWS_AS(bourne_congruence(*regz, bad), NotASubsemimodule);
}

TEST_CASE("Bourne congruence of the zero submodule is diagonal") {
  for (const char* id : {"B", "B3", "B31", "Z4", "Z6", "Ext Z2"}) {
    auto reg = regular_semimodule(construct(id));
    std::vector<bool> zero_only(reg->size, false);
    zero_only[reg->zero] = true;
    CHECK(bourne_congruence(*reg, ElementSubset{zero_only}).is_diagonal());
  }
}

TEST_CASE("diamond congruence examples") {
  auto b31 = truncated_naturals_b31();
  auto c = diamond_congruence(*b31);
  CHECK(c.block_of == std::vector<Elem>{0, 1, 1});
  auto q = quotient_semiring(b31, c);
  CHECK(are_isomorphic(*q.quotient, *boolean_semifield()).has_value());
  CHECK(diamond_congruence(*boolean_semifield()).is_diagonal());
  CHECK(diamond_congruence(*chain_semiring_b3()).is_diagonal());
  CHECK(diamond_congruence(*zn(4)).is_universal());
}

TEST_CASE("diamond quotients are additively idempotent") {
  for (const char* id : {"B", "B3", "B31", "Z4", "Z6", "Ext Z2", "Ext Z4"}) {
    auto s = construct(id);
    auto q = quotient_semiring(s, diamond_congruence(*s));
    for (Elem a = 0; a < q.quotient->size; ++a)
      CHECK(q.quotient->add(a, a) == a);
  }
}

TEST_CASE("Bourne congruence of the additive idempotents") {
  CHECK(theta_plus_congruence(truncated_naturals_b31()).is_universal());
  CHECK(theta_plus_congruence(zn(4)).is_diagonal());
  CHECK(theta_plus_congruence(ext_of_ring(zn(2))).is_universal());
}

TEST_CASE("matrix lift of congruences") {
  auto b3 = chain_semiring_b3();
  auto m2 = matrix_semiring(b3, 2);
  auto diag = diagonal_congruence(3, CongruenceKind::Semiring);
  CHECK(matrix_congruence_lift(b3, diag, 2, m2).is_diagonal());
  auto univ = universal_congruence(3, CongruenceKind::Semiring);
  CHECK(matrix_congruence_lift(b3, univ, 2, m2).is_universal());
  Congruence twoblock{CongruenceKind::Semiring, {0, 1, 1}};
  auto lifted = matrix_congruence_lift(b3, twoblock, 2, m2);
  CHECK(lifted.num_blocks() == 16);
  auto q = quotient_semiring(m2, lifted);
  CHECK(are_isomorphic(*q.quotient,
                       *matrix_semiring(boolean_semifield(), 2))
            .has_value());
}

TEST_CASE("quotients by diagonal and universal congruences") {
  auto b31 = truncated_naturals_b31();
  auto diag = quotient_semiring(
      b31, diagonal_congruence(3, CongruenceKind::Semiring));
  CHECK(same_semiring(*diag.quotient, *b31));
  auto univ = quotient_semiring(
      b31, universal_congruence(3, CongruenceKind::Semiring));
  CHECK(univ.quotient->size == 1);
  auto b3 = chain_semiring_b3();
  Congruence c{CongruenceKind::Semiring, {0, 1, 1}};
  auto q = quotient_semiring(b3, c);
  CHECK(are_isomorphic(*q.quotient, *boolean_semifield()).has_value());
  CHECK(q.projection == std::vector<Elem>{0, 1, 1});
}

TEST_CASE("quotient rejects the wrong congruence kind") {
  auto b3 = chain_semiring_b3();
  Congruence c{CongruenceKind::Semimodule, {0, 1, 1}};
  CHECK_THROWS_AS(quotient_semiring(b3, c), KindMismatch);
  // module quotient by a non-congruence partition
  Congruence bad{CongruenceKind::Semimodule, {0, 0, 2}};
  CHECK_THROWS_AS(quotient_semimodule(regular_semimodule(b3), bad),
                  KindMismatch);
}

TEST_CASE("congruence JSON block order follows the smallest member") {
  Congruence c{CongruenceKind::Semiring, {0, 1, 1, 0}};
  auto blocks = c.blocks();
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<Elem>{0, 3});
  CHECK(blocks[1] == std::vector<Elem>{1, 2});
}

TEST_CASE("quotient round trip over the enumerated universe") {
  // diagonal quotients are isomorphic to the original, universal quotients
  // collapse to a point
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_semirings(n)) {
      auto diag = quotient_semiring(
          s, diagonal_congruence(s->size, CongruenceKind::Semiring));
      CHECK(are_isomorphic(*diag.quotient, *s).has_value());
      auto univ = quotient_semiring(
          s, universal_congruence(s->size, CongruenceKind::Semiring));
      CHECK(univ.quotient->size == 1);
    }
}

TEST_CASE("refinement order is detected") {
  Congruence fine{CongruenceKind::Semiring, {0, 1, 1}};
  auto coarse = universal_congruence(3, CongruenceKind::Semiring);
  CHECK(refines(fine, coarse));
  CHECK_FALSE(refines(coarse, fine));
  CHECK(refines(fine, fine));
}
