#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semiring_lab/errors.hpp"

namespace semiring_lab {

using Elem = int;

inline constexpr int kDefaultSizeCap = 4096;
inline constexpr long kDefaultCongruenceCap = 100000;

// Structures whose carrier does not exceed this bound get a full axiom check
// when produced by a derived construction (matrix, quotient, corner, ...).
// Larger carriers are correct by construction and checked only in tests.
inline constexpr int kRecheckLimit = 128;

// A finite semiring given by Cayley tables over the carrier 0..size-1.
// Immutable after validation; share via SemiringPtr.
struct FiniteSemiring {
  int size = 0;
  std::vector<Elem> add_table;  // row-major size*size
  std::vector<Elem> mul_table;  // row-major size*size
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::string> labels;
  std::string name;

  Elem add(Elem a, Elem b) const { return add_table[a * size + b]; }
  Elem mul(Elem a, Elem b) const { return mul_table[a * size + b]; }

  const std::string& label(Elem a) const { return labels[a]; }
};

using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

// Structural equality of the algebra (labels and name ignored).
bool same_semiring(const FiniteSemiring& a, const FiniteSemiring& b);

// Throws AxiomViolation / ShapeError if the tables do not describe a
// semiring.
void check_semiring_axioms(const FiniteSemiring& s);

// Validates raw tables and returns the finished structure. `labels` may be
// empty, in which case decimal labels are generated.
SemiringPtr validate_semiring(int size, std::vector<Elem> add,
                              std::vector<Elem> mul, Elem zero, Elem one,
                              std::vector<std::string> labels = {},
                              std::string name = {});

// For constructions whose laws hold by construction. Rechecks small carriers.
SemiringPtr finish_semiring(FiniteSemiring s);

// Same carrier and addition, multiplication transposed.
SemiringPtr opposite(const SemiringPtr& s);

// n-fold sum 1+1+...+1 (n >= 0; n = 0 gives zero).
Elem multiple_of_one(const FiniteSemiring& s, int n);

// a + a + ... + a, n times.
Elem multiple(const FiniteSemiring& s, Elem a, int n);

}  // namespace semiring_lab
