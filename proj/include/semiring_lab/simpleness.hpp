#pragma once

#include <vector>

#include "semiring_lab/classify.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

enum class IdealSide { Right, Left, TwoSided };

struct IdealSet {
  IdealSide side = IdealSide::TwoSided;
  std::vector<ElementSubset> ideals;  // sorted by (size, lexicographic)
};

enum class IdealStrategy { Auto, SubsetScan, PrincipalClosure };

// Exhaustive ideal enumeration: subset scan up to 20 elements, join closure
// of the principal ideals above (every ideal is a finite join of principal
// ones, so both routes are exact; the small-carrier scan doubles as the
// oracle and tests cross-check the two strategies).
IdealSet ideals(const SemiringPtr& s, IdealSide side,
                IdealStrategy strategy = IdealStrategy::Auto);

// Exactly the trivial pair {0} and S among the two-sided ideals; the
// one-element semiring counts as not simple.
bool is_ideal_simple(const SemiringPtr& s);

// Exactly the diagonal and universal semiring congruences.
bool is_congruence_simple(const SemiringPtr& s,
                          long cap = kDefaultCongruenceCap);

bool is_simple(const SemiringPtr& s, long cap = kDefaultCongruenceCap);

}  // namespace semiring_lab
