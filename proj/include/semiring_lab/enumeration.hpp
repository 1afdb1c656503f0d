#pragma once

#include <vector>

#include "semiring_lab/iso.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// A commutative monoid as an addition table with identity at index 0.
struct CommutativeMonoid {
  int size = 0;
  std::vector<Elem> add;
};

// All commutative monoids on n elements up to isomorphism (identity pinned
// at 0, deduplicated by canonical form), in canonical-form order.
std::vector<CommutativeMonoid> enumerate_commutative_monoids(int n,
                                                             int max_order = 6);

// All semirings on n elements up to isomorphism: additive monoids from the
// monoid enumeration, every unit position, multiplication tables filled by
// brute force with the unit/zero rows pinned, axiom filter, canonical dedup.
std::vector<SemiringPtr> enumerate_semirings(int n, int max_order = 4);

}  // namespace semiring_lab
