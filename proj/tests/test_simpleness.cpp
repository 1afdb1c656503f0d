#include <algorithm>

#include "doctest.h"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/classify.hpp"
#include "semiring_lab/simpleness.hpp"

using namespace semiring_lab;

TEST_CASE("two-sided ideals of the chain semiring") {
  auto set = ideals(chain_semiring_b3(), IdealSide::TwoSided);
  REQUIRE(set.ideals.size() == 3);
  CHECK(set.ideals[0].elements() == std::vector<Elem>{0});
  CHECK(set.ideals[1].elements() == std::vector<Elem>{0, 2});
  CHECK(set.ideals[2].elements() == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("B has only the trivial ideals on either side") {
  for (auto side : {IdealSide::Right, IdealSide::Left, IdealSide::TwoSided})
    CHECK(ideals(boolean_semifield(), side).ideals.size() == 2);
}

TEST_CASE("ideals of Z4 are the ring ideals") {
  auto set = ideals(zn(4), IdealSide::TwoSided);
  REQUIRE(set.ideals.size() == 3);
  CHECK(set.ideals[1].elements() == std::vector<Elem>{0, 2});
}

TEST_CASE("principal closure route agrees with the subset scan") {
  for (const char* id : {"B3", "B31", "Z4", "Z6", "Ext Z2", "MatB 2"}) {
    auto s = construct(id);
    for (auto side : {IdealSide::Right, IdealSide::Left, IdealSide::TwoSided}) {
      auto scan = ideals(s, side, IdealStrategy::SubsetScan);
      auto closure = ideals(s, side, IdealStrategy::PrincipalClosure);
      CAPTURE(id);
      REQUIRE(scan.ideals.size() == closure.ideals.size());
      for (size_t i = 0; i < scan.ideals.size(); ++i)
        CHECK(scan.ideals[i].members == closure.ideals[i].members);
    }
  }
}

TEST_CASE("one-sided ideals of M2(B) differ from two-sided ones") {
  auto m2 = matrix_semiring(boolean_semifield(), 2);
  CHECK(ideals(m2, IdealSide::TwoSided).ideals.size() == 2);
  CHECK(ideals(m2, IdealSide::Right).ideals.size() > 2);
}

TEST_CASE("distinguished subsets are among the two-sided ideals") {
  for (const char* id : {"B3", "B31", "Z4", "Ext Z2", "Z6"}) {
    auto s = construct(id);
    auto set = ideals(s, IdealSide::TwoSided);
    for (auto kind : {SubsetKind::AddIdempotents, SubsetKind::Zeroids,
                      SubsetKind::AddInvertible}) {
      auto subset = distinguished_subset(*s, kind);
      bool found = std::any_of(
          set.ideals.begin(), set.ideals.end(),
          [&](const ElementSubset& i) { return i.members == subset.members; });
      CAPTURE(id);
      CHECK(found);
    }
  }
}

TEST_CASE("simpleness verdicts") {
  CHECK(is_ideal_simple(boolean_semifield()));
  CHECK_FALSE(is_ideal_simple(chain_semiring_b3()));
  auto m2 = matrix_semiring(boolean_semifield(), 2);
  CHECK(is_ideal_simple(m2));
  CHECK(is_congruence_simple(boolean_semifield()));
  CHECK_FALSE(is_congruence_simple(chain_semiring_b3()));
  CHECK(is_congruence_simple(m2));
  CHECK(is_simple(m2));
  CHECK_FALSE(is_simple(chain_semiring_b3()));
  CHECK_FALSE(is_simple(truncated_naturals_b31()));
}

TEST_CASE("the one-element semiring is declared not simple") {
  auto t = zn(1);
  CHECK_FALSE(is_ideal_simple(t));
  CHECK_FALSE(is_congruence_simple(t));
  CHECK_FALSE(is_simple(t));
}
