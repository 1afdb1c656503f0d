#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/enumeration.hpp"
#include "semiring_lab/iso.hpp"
#include "semiring_lab/lattice.hpp"

using namespace semiring_lab;

namespace {

// relabel a semiring by a permutation (test helper)
SemiringPtr relabel(const FiniteSemiring& s, const std::vector<Elem>& p) {
  FiniteSemiring t;
  t.size = s.size;
  t.add_table.resize(s.add_table.size());
  t.mul_table.resize(s.mul_table.size());
  t.labels.resize(s.size);
  for (Elem a = 0; a < s.size; ++a) {
    t.labels[p[a]] = s.labels[a];
    for (Elem b = 0; b < s.size; ++b) {
      t.add_table[p[a] * s.size + p[b]] = p[s.add(a, b)];
      t.mul_table[p[a] * s.size + p[b]] = p[s.mul(a, b)];
    }
  }
  t.zero = p[s.zero];
  t.one = p[s.one];
  return finish_semiring(std::move(t));
}

bool preserves_ops(const FiniteSemiring& a, const FiniteSemiring& b,
                   const std::vector<Elem>& f) {
  if (f[a.zero] != b.zero || f[a.one] != b.one) return false;
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < a.size; ++y) {
      if (f[a.add(x, y)] != b.add(f[x], f[y])) return false;
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("identity isomorphism on B") {
  auto b = boolean_semifield();
  auto f = are_isomorphic(*b, *b);
  REQUIRE(f.has_value());
  CHECK(*f == std::vector<Elem>{0, 1});
}

TEST_CASE("Z2 and B differ in additive structure") {
  CHECK_FALSE(are_isomorphic(*zn(2), *boolean_semifield()).has_value());
}

TEST_CASE("M2(B) is the endomorphism semiring of the square lattice") {
  auto m2b = matrix_semiring(boolean_semifield(), 2);
  auto regb = regular_semimodule(boolean_semifield());
  auto square = lattice_from_module(*direct_sum_modules({regb, regb}));
  auto endo = endomorphism_semiring(square);
  auto f = are_isomorphic(*m2b, *endo.ring);
  REQUIRE(f.has_value());
  CHECK(preserves_ops(*m2b, *endo.ring, *f));
}

TEST_CASE("returned bijections verify operation preservation") {
  auto b31 = truncated_naturals_b31();
  std::vector<Elem> p{1, 2, 0};  // move zero away from index 0
  auto shuffled = relabel(*b31, p);
  auto f = are_isomorphic(*b31, *shuffled);
  REQUIRE(f.has_value());
  CHECK(preserves_ops(*b31, *shuffled, *f));
}

TEST_CASE("canonical form is relabeling-invariant and separates B3 from B31") {
  auto b3 = chain_semiring_b3();
  std::vector<Elem> p{2, 0, 1};
  CHECK(canonical_form(*b3) == canonical_form(*relabel(*b3, p)));
  CHECK_FALSE(canonical_form(*b3) == canonical_form(*truncated_naturals_b31()));
}

TEST_CASE("canonical form of a commutative semiring equals its opposite") {
  for (const char* id : {"B", "B3", "B31", "Z4", "Z6"}) {
    auto s = construct(id);
    CHECK(canonical_form(*s) == canonical_form(*opposite(s)));
  }
}

TEST_CASE("canonical forms agree with isomorphism over order 3") {
  auto all = enumerate_semirings(3);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) {
      bool same_form = canonical_form(*all[i]) == canonical_form(*all[j]);
      bool isomorphic = are_isomorphic(*all[i], *all[j]).has_value();
      CAPTURE(i);
      CAPTURE(j);
      CHECK(same_form == isomorphic);
    }
}

TEST_CASE("semimodule isomorphism requires the same ground semiring") {
  auto b = boolean_semifield();
  auto z2 = zn(2);
  CHECK_FALSE(
      are_isomorphic(*regular_semimodule(b), *regular_semimodule(z2)).has_value());
  CHECK(are_isomorphic(*regular_semimodule(b), *regular_semimodule(b)).has_value());
}

TEST_CASE("semimodule isomorphism is action-aware") {
  // same additive monoid (the three-chain), different scalar actions: the
  // regular action of B3 versus the action where 2 acts as the identity
  auto b3 = chain_semiring_b3();
  auto reg = regular_semimodule(b3);
  auto tweaked = validate_semimodule(
      b3, 3, reg->add_table, 0, {0, 0, 0, 0, 1, 1, 0, 2, 2});
  CHECK(are_isomorphic(*reg, *reg).has_value());
  CHECK_FALSE(are_isomorphic(*reg, *tweaked).has_value());
}

TEST_CASE("canonical form above eight elements uses invariant classes") {
  auto m2 = matrix_semiring(boolean_semifield(), 2);
  auto form = canonical_form(*m2);
  CHECK(form.bytes.size() == 1 + 2 * 16 * 16);
  // relabeled copy matches
  std::vector<Elem> p(16);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(p.begin(), p.end(), rng);
  CHECK(canonical_form(*relabel(*m2, p)) == form);
}

TEST_CASE("lattice isomorphism distinguishes the diamond from the pentagon") {
  CHECK(are_isomorphic(diamond_m3(), diamond_m3()).has_value());
  CHECK_FALSE(are_isomorphic(diamond_m3(), pentagon_n5()).has_value());
}
