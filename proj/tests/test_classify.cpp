#include <algorithm>

#include "doctest.h"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/classify.hpp"
#include "semiring_lab/enumeration.hpp"

using namespace semiring_lab;

TEST_CASE("distinguished subsets by table scan") {
  auto b31 = truncated_naturals_b31();
  CHECK(distinguished_subset(*b31, SubsetKind::AddIdempotents).elements() ==
        std::vector<Elem>{0, 2});
  auto z4 = zn(4);
  CHECK(distinguished_subset(*z4, SubsetKind::AddInvertible).count() == 4);
  auto b3 = chain_semiring_b3();
  CHECK(distinguished_subset(*b3, SubsetKind::MulIdempotents).elements() ==
        std::vector<Elem>{0, 1, 2});
  CHECK_THROWS_AS(
      distinguished_subset(*regular_semimodule(b3), SubsetKind::MulIdempotents),
      KindMismatch);
}

TEST_CASE("zeroid of an extension semiring is everything") {
  auto e = ext_of_ring(zn(2));
  CHECK(distinguished_subset(*e, SubsetKind::Zeroids).count() == e->size);
}

TEST_CASE("B3 fails right Gelfand at s = 2") {
  auto rep = classify(chain_semiring_b3());
  CHECK_FALSE(rep.gelfand_right.value);
  CHECK(rep.gelfand_right.witness.at("s") == 2);
  CHECK_FALSE(rep.gelfand_left.value);
  CHECK(rep.anti_bounded.value);
  CHECK(rep.additively_idempotent.value);
  CHECK(rep.entire.value);
  CHECK(rep.zerosumfree.value);
}

TEST_CASE("B31 is anti-bounded but not right subtractive") {
  auto rep = classify(truncated_naturals_b31());
  CHECK(rep.anti_bounded.value);
  CHECK(rep.zerosumfree.value);
  CHECK_FALSE(rep.right_subtractive.value);
  const auto& w = rep.right_subtractive.witness;
  CHECK(w.at("K") == nlohmann::json::array({0, 2}));
  CHECK(w.at("m") == 2);
  CHECK(w.at("m_prime") == 1);
}

TEST_CASE("Ext(Z2) is zeroic, zerosumfree, anti-bounded, pi-regular") {
  auto rep = classify(ext_of_ring(zn(2)));
  CHECK(rep.zeroic.value);
  CHECK(rep.zerosumfree.value);
  CHECK(rep.anti_bounded.value);
  CHECK(rep.additively_pi_regular.value);
}

TEST_CASE("every Ext of a finite ring is anti-bounded and zerosumfree") {
  for (int n : {1, 2, 3, 4, 6}) {
    auto rep = classify(ext_of_ring(zn(n)));
    CHECK(rep.anti_bounded.value);
    CHECK(rep.zerosumfree.value);
  }
}

TEST_CASE("rings classify as rings and are never zerosumfree beyond size 1") {
  auto rep = classify(zn(4));
  CHECK(rep.ring.value);
  CHECK_FALSE(rep.zerosumfree.value);
  CHECK(rep.additively_pi_regular.value);
  CHECK(rep.right_subtractive.value);
  CHECK(rep.left_subtractive.value);
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_semirings(n)) {
      auto r = classify(s);
      if (r.ring.value) CHECK(r.zerosumfree.value == (s->size == 1));
    }
}

TEST_CASE("pi-regularity witness verifies") {
  for (const char* id : {"B", "B3", "B31", "Z4", "Ext Z2", "Z6"}) {
    auto s = construct(id);
    auto rep = classify(s);
    REQUIRE(rep.additively_pi_regular.value);
    int n = rep.additively_pi_regular.witness.at("n");
    Elem y = rep.additively_pi_regular.witness.at("y");
    Elem n1 = multiple_of_one(*s, n);
    CHECK(s->add(s->add(n1, y), n1) == n1);
  }
}

TEST_CASE("finite Boolean algebra flag") {
  CHECK(classify(boolean_semifield()).finite_boolean_algebra.value);
  CHECK(classify(boolean_algebra(2)).finite_boolean_algebra.value);
  CHECK(classify(zn(1)).finite_boolean_algebra.value);
  CHECK_FALSE(classify(chain_semiring_b3()).finite_boolean_algebra.value);
  CHECK_FALSE(classify(zn(2)).finite_boolean_algebra.value);
}

TEST_CASE("Gelfand inverses witness verifies") {
  auto rep = classify(boolean_algebra(2));
  REQUIRE(rep.gelfand_right.value);
  auto s = boolean_algebra(2);
  auto inv = rep.gelfand_right.witness.at("inverses");
  for (Elem x = 0; x < s->size; ++x)
    CHECK(s->mul(s->add(s->one, x), Elem(inv[x])) == s->one);
}

TEST_CASE("subtractive flags use the regular semimodule on both sides") {
  // commutative: both sides agree
  for (const char* id : {"B", "B3", "B31", "Z4", "Z6"}) {
    auto rep = classify(construct(id));
    CHECK(rep.right_subtractive.value == rep.left_subtractive.value);
  }
}

TEST_CASE("report JSON carries every flag") {
  auto j = classify(boolean_semifield()).to_json();
  for (const char* flag :
       {"zeroic", "zerosumfree", "additively_idempotent",
        "additively_pi_regular", "gelfand_right", "gelfand_left",
        "anti_bounded", "entire", "ring", "finite_boolean_algebra",
        "right_subtractive", "left_subtractive"}) {
    CAPTURE(flag);
    CHECK(j.contains(flag));
    CHECK(j[flag].contains("value"));
    CHECK(j[flag].contains("witness"));
  }
}
