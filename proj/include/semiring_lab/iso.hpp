#pragma once

#include <optional>
#include <vector>

#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// Operation signature shared by the isomorphism search and canonical forms:
// binary Cayley tables, unary maps (e.g. one action column per scalar, which
// an isomorphism must preserve index-for-index), and pinned constants.
struct AlgebraSig {
  int size = 0;
  std::vector<std::vector<Elem>> binary;  // row-major size*size each
  std::vector<std::vector<Elem>> unary;   // length size each
  std::vector<Elem> constants;
};

AlgebraSig semiring_sig(const FiniteSemiring& s);
AlgebraSig module_sig(const FiniteSemimodule& m);

// Stable invariant colors (iterated refinement, ranks assigned by sorted
// signature). Isomorphic structures get identical color profiles.
std::vector<int> invariant_colors(const AlgebraSig& sig);

// Backtracking search with color pruning; returns the mapping a -> b or
// nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const AlgebraSig& a,
                                                  const AlgebraSig& b);

std::optional<std::vector<Elem>> are_isomorphic(const FiniteSemiring& a,
                                                const FiniteSemiring& b);

// Semimodules must share the ground semiring (element-for-element).
std::optional<std::vector<Elem>> are_isomorphic(const FiniteSemimodule& a,
                                                const FiniteSemimodule& b);

enum class StructureKind { Monoid, Semiring, Semimodule, Lattice };

// Flattened tables under the canonical labeling; equal bytes iff isomorphic
// (bijections fix the constants: zero always, one for semirings).
struct CanonicalForm {
  StructureKind kind = StructureKind::Semiring;
  std::vector<Elem> bytes;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

// Carriers up to 8 use the full permutation search; larger ones permute
// within invariant color classes and throw SizeCapExceeded when the class
// budget is blown.
CanonicalForm canonical_form(const AlgebraSig& sig, StructureKind kind);
CanonicalForm canonical_form(const FiniteSemiring& s);
CanonicalForm canonical_form(const FiniteSemimodule& m);

}  // namespace semiring_lab
