#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiring_lab/congruence.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// A finite bounded lattice: order table plus derived join/meet and bounds.
struct FiniteLattice {
  int size = 0;
  std::vector<bool> leq;  // row-major size*size
  std::vector<Elem> join_table;
  std::vector<Elem> meet_table;
  Elem bottom = 0;
  Elem top = 0;
  std::vector<std::string> labels;
  std::string name;

  bool le(Elem a, Elem b) const { return leq[a * size + b]; }
  Elem join(Elem a, Elem b) const { return join_table[a * size + b]; }
  Elem meet(Elem a, Elem b) const { return meet_table[a * size + b]; }
  const std::string& label(Elem a) const { return labels[a]; }
};

// Order axioms verified, join/meet computed from the order.
FiniteLattice validate_lattice(int size, std::vector<bool> leq,
                               std::vector<std::string> labels = {},
                               std::string name = {});

// Rebuild a lattice from a join table (finite bounded join-semilattices
// always have meets: the join of the common lower bounds).
FiniteLattice lattice_from_join(int size, const std::vector<Elem>& join,
                                std::vector<std::string> labels = {},
                                std::string name = {});

// (carrier, join, bottom) as a semimodule over the Boolean semifield:
// m*0 = bottom, m*1 = m.
ModulePtr as_semimodule(const FiniteLattice& l);

// Inverse of as_semimodule for any semimodule whose addition is a bounded
// join-semilattice (e.g. quotients of lattices).
FiniteLattice lattice_from_module(const FiniteSemimodule& m);

struct DistributivityReport {
  bool distributive = false;
  std::vector<Elem> witness_triple;       // x, y, z when not distributive
  std::vector<Elem> forbidden_sublattice; // 5 elements forming M3 or N5
  std::string forbidden_kind;             // "M3" or "N5"
};

DistributivityReport is_distributive(const FiniteLattice& l);

// Join-semilattice congruences of the lattice (its B-semimodule view).
CongruenceSet lattice_congruences(const FiniteLattice& l,
                                  long cap = kDefaultCongruenceCap);

// The chain of elements comparable to everything; contains the bounds.
struct TChain {
  std::vector<Elem> members;  // ascending in the lattice order
};

TChain t_chain(const FiniteLattice& l);

FiniteLattice interval(const FiniteLattice& l, Elem a, Elem b);
bool is_simple_interval(const FiniteLattice& l, Elem a, Elem b);

// Every quotient by a join-congruence is distributive (as a lattice).
bool quotient_distributivity_condition(const FiniteLattice& l,
                                       long cap = kDefaultCongruenceCap);

// Between consecutive members of the T-chain the interval is simple or a
// two-atom square (the four-element Boolean lattice). Requires a
// distributive lattice.
bool tchain_interval_condition(const FiniteLattice& l);

// End(M) for a lattice M: join- and bottom-preserving self-maps, addition
// pointwise join, multiplication composition (f*g applies g first is NOT
// used; f*g maps x to f(g(x))). Elements ordered lexicographically by map
// vector.
struct EndomorphismSemiring {
  FiniteLattice lattice;
  SemiringPtr ring;
  std::vector<std::vector<Elem>> maps;  // element index -> map vector

  Elem index_of(const std::vector<Elem>& map) const;
};

// Enumerated over monotone assignments to the join-irreducible elements
// with join-consistency checks, so moderately sized lattices stay cheap.
EndomorphismSemiring endomorphism_semiring(const FiniteLattice& l,
                                           int size_cap = kDefaultSizeCap);

std::vector<Elem> join_irreducibles(const FiniteLattice& l);

// The map x -> bottom if x <= a, b otherwise; always an endomorphism.
Elem step_endomorphism(const EndomorphismSemiring& endo, Elem a, Elem b);

// End(M) for an arbitrary finite semimodule (maps preserving addition, zero
// and the action), enumerated via generator assignments.
struct ModuleEndomorphisms {
  ModulePtr module;
  SemiringPtr ring;
  std::vector<std::vector<Elem>> maps;
};

ModuleEndomorphisms module_endomorphism_semiring(
    const ModulePtr& m, int size_cap = kDefaultSizeCap);

// Finite posets as reflexive order matrices.
struct Poset {
  int size = 0;
  std::vector<bool> leq;
};

// The lattice of down-closed subsets ordered by inclusion.
FiniteLattice downset_lattice(const Poset& p,
                              int size_cap = kDefaultSizeCap);

// One representative per isomorphism class, canonicalized by the
// lexicographically minimal adjacency matrix.
std::vector<Poset> enumerate_posets(int n);

// Down-set lattices of all posets with 1..max_poset_size elements (one per
// poset class; by Birkhoff duality one per distributive-lattice class).
std::vector<FiniteLattice> enumerate_distributive_lattices(
    int max_poset_size, int size_cap = kDefaultSizeCap);

// Base decomposition of a semimodule over a finite Boolean algebra: quotient
// of the base by the annihilator, one component lattice M*e per atom.
struct BooleanDecomposition {
  SemiringPtr base_quotient;
  std::vector<Elem> annihilator;  // elements of the base
  struct Component {
    Elem atom_rep;  // smallest base element mapping onto the atom
    FiniteLattice lattice;
  };
  std::vector<Component> components;
};

BooleanDecomposition boolean_base_decomposition(const ModulePtr& m);

std::optional<std::vector<Elem>> are_isomorphic(const FiniteLattice& a,
                                                const FiniteLattice& b);

// Fixed small lattices used around the forbidden-sublattice machinery.
FiniteLattice diamond_m3();
FiniteLattice pentagon_n5();
FiniteLattice chain_lattice(int n);

}  // namespace semiring_lab
