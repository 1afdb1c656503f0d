#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "semiring_lab/classify.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

enum class CongruenceKind { Semimodule, Semiring };

// A congruence as a canonical block vector: block_of[i] is the smallest
// element of i's class. Semimodule congruences respect addition and the
// right action, semiring congruences additionally left multiplication.
struct Congruence {
  CongruenceKind kind = CongruenceKind::Semimodule;
  std::vector<Elem> block_of;

  int size() const { return static_cast<int>(block_of.size()); }
  bool related(Elem a, Elem b) const { return block_of[a] == block_of[b]; }
  int num_blocks() const;
  std::vector<std::vector<Elem>> blocks() const;
  bool is_diagonal() const;
  bool is_universal() const;

  bool operator==(const Congruence&) const = default;
};

Congruence diagonal_congruence(int size, CongruenceKind kind);
Congruence universal_congruence(int size, CongruenceKind kind);

// Whether every block of `fine` sits inside a block of `coarse`.
bool refines(const Congruence& fine, const Congruence& coarse);

// Least congruence containing both (their partition join; transitive closure
// of the union of two congruences is already compatible).
Congruence join(const Congruence& a, const Congruence& b);

// A semiring congruence is in particular a congruence of the regular right
// semimodule.
Congruence as_module_congruence(Congruence c);

// Uniform view over the two carrier kinds for congruence computations.
// Exactly one of ring/module is set, matching `kind` (a Semimodule view of a
// semiring means congruences of the regular right semimodule).
struct StructureView {
  const FiniteSemiring* ring = nullptr;
  const FiniteSemimodule* module = nullptr;
  CongruenceKind kind = CongruenceKind::Semimodule;

  int size() const;
  int scalars() const;
  Elem add(Elem a, Elem b) const;
  Elem act(Elem a, Elem s) const;  // right action / right multiplication
  Elem lmul(Elem c, Elem a) const; // semiring kind only
};

StructureView semiring_view(const FiniteSemiring& s);
StructureView module_view_of_semiring(const FiniteSemiring& s);
StructureView module_view(const FiniteSemimodule& m);

// Compatibility re-check of a canonical block vector.
bool is_congruence(const StructureView& v, const std::vector<Elem>& block_of);

// Least congruence of the view's kind containing the given pairs, by
// union-find with a worklist propagating operation compatibility.
Congruence generated_congruence(const StructureView& v,
                                const std::vector<std::pair<Elem, Elem>>& pairs);

struct CongruenceSet {
  CongruenceKind kind = CongruenceKind::Semimodule;
  std::vector<Congruence> congruences;  // sorted: blocks desc, vector lex
  bool complete = false;
};

// Streams every congruence of the view (diagonal, then the principal
// congruences in pair order, then joins, hash-deduplicated) until the
// consumer returns false or the closure finishes. Throws
// CongruenceLimitExceeded when more than `cap` distinct congruences appear.
// Returns true iff the closure ran to completion.
bool enumerate_congruences(const StructureView& v, long cap,
                           const std::function<bool(const Congruence&)>& sink);

CongruenceSet all_congruences(const StructureView& v,
                              long cap = kDefaultCongruenceCap);
CongruenceSet all_congruences(const FiniteSemiring& s, CongruenceKind kind,
                              long cap = kDefaultCongruenceCap);
CongruenceSet all_congruences(const FiniteSemimodule& m,
                              long cap = kDefaultCongruenceCap);

// The Bourne congruence of a subsemimodule K: m == m' iff m+l = m'+l' for
// some l, l' in K. The relation is already transitive for subsemimodules;
// the closure is asserted to be a no-op.
Congruence bourne_congruence(const FiniteSemimodule& m,
                             const ElementSubset& k);

// a ~ b iff na = b+x and n'b = a+x' for some n, n' in 1..|S| and x, x'.
// Verified to be a semiring congruence; the quotient is additively
// idempotent.
Congruence diamond_congruence(const FiniteSemiring& s);

// The Bourne congruence of the additive idempotents, as a semiring
// congruence (compatibility verified).
Congruence theta_plus_congruence(const SemiringPtr& s);

// Entrywise lift of a semiring congruence to the n x n matrix semiring.
// `matrix_ring` must be matrix_semiring(s, n); the lift is verified to be a
// semiring congruence on it.
Congruence matrix_congruence_lift(const SemiringPtr& s, const Congruence& theta,
                                  int n, const SemiringPtr& matrix_ring);

struct SemiringQuotient {
  SemiringPtr quotient;
  std::vector<Elem> projection;  // parent element -> quotient element
};

struct ModuleQuotient {
  ModulePtr quotient;
  SemimoduleHom projection;
};

// Quotient structures on blocks (indexed by smallest member) plus the
// canonical projection.
SemiringQuotient quotient_semiring(const SemiringPtr& s, const Congruence& c);
ModuleQuotient quotient_semimodule(const ModulePtr& m, const Congruence& c);

}  // namespace semiring_lab
