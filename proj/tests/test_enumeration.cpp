#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/enumeration.hpp"
#include "semiring_lab/iso.hpp"
#include "semiring_lab/lattice.hpp"

using namespace semiring_lab;

TEST_CASE("commutative monoid counts at tiny orders") {
  CHECK(enumerate_commutative_monoids(1).size() == 1);
  auto two = enumerate_commutative_monoids(2);
  REQUIRE(two.size() == 2);  // x+x = 0 and x+x = x
  std::set<Elem> cell_values;
  for (const auto& m : two) cell_values.insert(m.add[3]);
  CHECK(cell_values == std::set<Elem>{0, 1});
  CHECK(enumerate_commutative_monoids(3).size() ==
        oracles::naive_monoid_count(3));
  CHECK_THROWS_AS(enumerate_commutative_monoids(9), SizeCapExceeded);
}

TEST_CASE("semiring enumeration at order two gives B and Z2") {
  auto all = enumerate_semirings(2);
  REQUIRE(all.size() == 2);
  bool has_b = false, has_z2 = false;
  for (const auto& s : all) {
    has_b = has_b || are_isomorphic(*s, *boolean_semifield()).has_value();
    has_z2 = has_z2 || are_isomorphic(*s, *zn(2)).has_value();
  }
  CHECK(has_b);
  CHECK(has_z2);
}

TEST_CASE("semiring enumeration counts match the naive oracle") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(enumerate_semirings(n).size()) ==
          oracles::naive_semiring_count(n));
  }
}

TEST_CASE("order three contains the named structures") {
  auto all = enumerate_semirings(3);
  auto contains = [&](const FiniteSemiring& target) {
    return std::any_of(all.begin(), all.end(), [&](const SemiringPtr& s) {
      return are_isomorphic(*s, target).has_value();
    });
  };
  CHECK(contains(*chain_semiring_b3()));
  CHECK(contains(*truncated_naturals_b31()));
  CHECK(contains(*zn(3)));
  // the three-element chain as a bounded distributive lattice
  auto chain3 = chain_lattice(3);
  std::vector<Elem> meet = chain3.meet_table;
  auto lattice_semiring =
      validate_semiring(3, chain3.join_table, std::move(meet), 0, 2);
  CHECK(contains(*lattice_semiring));
}

TEST_CASE("every catalog semiring of order at most four appears") {
  for (const char* id : {"trivial", "B", "Z2", "Z3", "B3", "B31", "Z4",
                         "Bk 2", "Ext Z2", "Sum Z2 B"}) {
    auto target = construct(id);
    REQUIRE(target->size <= 4);
    auto all = enumerate_semirings(target->size);
    CAPTURE(id);
    CHECK(std::any_of(all.begin(), all.end(), [&](const SemiringPtr& s) {
      return are_isomorphic(*s, *target).has_value();
    }));
  }
}

TEST_CASE("enumeration output is deduplicated and canonically ordered") {
  auto all = enumerate_semirings(3);
  std::vector<CanonicalForm> forms;
  for (const auto& s : all) forms.push_back(canonical_form(*s));
  for (size_t i = 0; i + 1 < forms.size(); ++i) {
    CHECK(forms[i] < forms[i + 1]);
  }
}

TEST_CASE("enumerated semirings all validate") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : enumerate_semirings(n)) check_semiring_axioms(*s);
}
