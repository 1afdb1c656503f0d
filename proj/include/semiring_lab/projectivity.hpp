#pragma once

#include <optional>
#include <vector>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// One cyclic right semimodule of S, presented as a quotient of the regular
// semimodule by a semimodule congruence.
struct CyclicQuotient {
  SemiringPtr ring;
  Congruence congruence;
  ModulePtr quotient;
  SemimoduleHom projection;
};

// One quotient per semimodule congruence on S_S, diagonal and universal
// included, in the order of all_congruences.
std::vector<CyclicQuotient> cyclic_quotients(const SemiringPtr& s,
                                             long cap = kDefaultCongruenceCap);

// The least e such that (well-definedness) x ~ y implies ex = ey and
// (section) ex ~ x for all x. Such an e splits the projection S_S -> S_S/~,
// so the quotient is a retract of S_S and projective; conversely a
// projective cyclic quotient always yields one, so nullopt certifies
// non-projectivity.
std::optional<Elem> splitting_idempotent(const FiniteSemiring& s,
                                         const Congruence& theta);

struct Splitting {
  Congruence congruence;
  Elem idempotent;
};

struct CpVerdict {
  bool is_cp = false;
  std::optional<Congruence> witness;  // unsplittable congruence when false
  std::vector<Splitting> splittings;  // successes, in enumeration order

  nlohmann::json to_json() const;
};

// Decides whether every cyclic right semimodule is projective, by streaming
// the semimodule congruences of S_S through the splitting search. Stops at
// the first unsplittable congruence unless `exhaustive`.
CpVerdict is_cp(const SemiringPtr& s, bool exhaustive = false,
                long cap = kDefaultCongruenceCap);

// The left-sided verdict: is_cp on the opposite semiring.
CpVerdict is_cp_left(const SemiringPtr& s, bool exhaustive = false,
                     long cap = kDefaultCongruenceCap);

// Targeted non-projectivity certificate for matrix semirings over an
// additively idempotent semiring that is not a ring (dimension >= 3): the
// kernel congruence of X -> AX on the regular semimodule of Mn(S), where A
// has zero diagonal and unit entries elsewhere. Works on the matrix carrier
// without materializing its tables, so large n stay affordable.
struct MatrixCpWitness {
  long matrix_size = 0;
  Congruence kernel;                 // semimodule congruence on Mn(S)
  std::optional<Elem> splitting;     // expected nullopt
};

MatrixCpWitness matrix_cp_counterexample(const SemiringPtr& s, int n,
                                         long element_cap = 1 << 20);

// Finite diagram of semimodules over one semiring.
struct Diagram {
  std::vector<ModulePtr> nodes;
  struct Edge {
    int source = 0;  // node index
    int target = 0;
    std::vector<Elem> map;  // source node element -> target node element
  };
  std::vector<Edge> edges;
};

// Nodes mS for every m (one node per element), with embedding data; edges
// nS -> mS for every m, s with ms = n (the maps are subset inclusions).
struct CDiagram {
  ModulePtr parent;
  Diagram diagram;
  std::vector<std::vector<Elem>> node_elements;  // node index -> parent elems
};

CDiagram full_c_diagram(const ModulePtr& m);

struct ColimitResult {
  ModulePtr colimit;
  ModulePtr sum;                       // materialized direct sum of the nodes
  Congruence gluing;                   // congruence on the sum
  std::vector<SemimoduleHom> cocone;   // node -> colimit
};

// Direct sum of the nodes modulo the congruence generated by matching every
// edge image with its argument.
ColimitResult colimit(const Diagram& d, int size_cap = kDefaultSizeCap);

// The unique mediating hom onto a candidate cocone, or nullopt when the
// candidate is not compatible (which refutes the universal property if the
// candidate is itself a cocone).
std::optional<SemimoduleHom> mediating_hom(
    const Diagram& d, const ColimitResult& c,
    const std::vector<SemimoduleHom>& candidate);

// Greedy minimal generating set: repeatedly adjoin the element whose
// principal subsemimodule extends the generated part the most.
std::vector<Elem> greedy_generating_set(const FiniteSemimodule& m);

// Whether the canonical surjection S^g -> M from a generating set splits.
// The section search assigns images to the generators (restricted to the
// fibers of the surjection) and closes the graph; budget guards the fiber
// product.
bool is_projective(const ModulePtr& m,
                   std::optional<std::vector<Elem>> generators = std::nullopt,
                   long budget = 1 << 22);

// All ordered pairs (e, f) of central idempotents with e+f = 1 and
// ef = fe = 0; each is verified to split S as a direct sum of the two
// corners (the zero corner read as the trivial semiring).
std::vector<std::pair<Elem, Elem>> peirce_decompositions(const SemiringPtr& s);

// Corner for Peirce pairs: eSe, with e = 0 giving the trivial semiring.
SemiringPtr corner_or_trivial(const SemiringPtr& s, Elem e);

// The element w with x + w = w for all x, if present.
std::optional<Elem> infinite_element(const FiniteSemiring& s);

}  // namespace semiring_lab
