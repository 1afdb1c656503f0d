#pragma once

#include <string>
#include <vector>

#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// The two-element Boolean semifield (add = or, mul = and).
SemiringPtr boolean_semifield();

// The chain 0 < 1 < 2 with addition max and multiplication
// x*y = 0 if either factor is 0, max(x, y) otherwise.
SemiringPtr chain_semiring_b3();

// Truncated naturals {0,1,2} with a(+)b = min(2, a+b), a(*)b = min(2, ab).
SemiringPtr truncated_naturals_b31();

// Integers modulo n. n = 1 gives the trivial semiring.
SemiringPtr zn(int n);

// The Boolean algebra with 2^k elements (bitmask carrier, add = or,
// mul = and).
SemiringPtr boolean_algebra(int k, int size_cap = kDefaultSizeCap);

// A ring R extended by a fresh absorbing zero and an infinite element:
// carrier {0} + R + {inf}, x + inf = inf, 0*inf = 0, inf absorbing among
// nonzero elements. Requires V(R) = R (i.e. R is a ring), else BadParams.
SemiringPtr ext_of_ring(const SemiringPtr& ring);

// n x n matrices over S, carrier in row-major lexicographic order (first
// entry most significant digit base |S|).
SemiringPtr matrix_semiring(const SemiringPtr& s, int n,
                            int size_cap = kDefaultSizeCap);

// Encode/decode between a matrix (row-major entries) and its carrier index.
std::vector<Elem> matrix_decode(const FiniteSemiring& base, int n, Elem idx);
Elem matrix_encode(const FiniteSemiring& base, int n,
                   const std::vector<Elem>& entries);

// Componentwise operations on the product carrier (lexicographic, first
// component most significant).
SemiringPtr direct_sum(const SemiringPtr& a, const SemiringPtr& b,
                       int size_cap = kDefaultSizeCap);

// The corner eSe for a nonzero multiplicative idempotent e; carrier in
// ascending order of the parent indices, unit e, zero 0.
SemiringPtr corner_semiring(const SemiringPtr& s, Elem e);

// String-driven construction used by the CLI and fixtures. Understands:
//   trivial | B | B3 | B31 | Z<n> | Zn <n> | Bk <k> | Ext <id...> |
//   Mat <id...> <n> | MatB <n> | Sum <id> <id>
std::vector<std::string> catalog_ids();
SemiringPtr construct(const std::vector<std::string>& tokens,
                      int size_cap = kDefaultSizeCap);
SemiringPtr construct(const std::string& spec,
                      int size_cap = kDefaultSizeCap);

}  // namespace semiring_lab
