#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// A finite right semimodule over a finite semiring, given by an addition
// table and a right-action table (size x |ring| entries, m*s).
struct FiniteSemimodule {
  SemiringPtr ring;
  int size = 0;
  std::vector<Elem> add_table;     // row-major size*size
  Elem zero = 0;
  std::vector<Elem> action_table;  // row-major size*ring->size
  std::vector<std::string> labels;
  std::string name;

  Elem add(Elem a, Elem b) const { return add_table[a * size + b]; }
  Elem act(Elem m, Elem s) const { return action_table[m * ring->size + s]; }
  const std::string& label(Elem a) const { return labels[a]; }
};

using ModulePtr = std::shared_ptr<const FiniteSemimodule>;

bool same_module(const FiniteSemimodule& a, const FiniteSemimodule& b);

void check_semimodule_axioms(const FiniteSemimodule& m);

ModulePtr validate_semimodule(SemiringPtr ring, int size,
                              std::vector<Elem> add, Elem zero,
                              std::vector<Elem> action,
                              std::vector<std::string> labels = {},
                              std::string name = {});

// For constructions whose laws hold by construction; rechecks small carriers.
ModulePtr finish_semimodule(FiniteSemimodule m);

// S as a right semimodule over itself (action = multiplication).
ModulePtr regular_semimodule(const SemiringPtr& s);

// A structure-preserving map between semimodules over the same semiring.
struct SemimoduleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Elem> map;  // length source->size

  Elem operator()(Elem a) const { return map[a]; }
};

// Throws AxiomViolation if `map` is not a homomorphism.
SemimoduleHom validate_hom(ModulePtr source, ModulePtr target,
                           std::vector<Elem> map);

bool is_surjective(const SemimoduleHom& h);
bool is_injective(const SemimoduleHom& h);

// Least subsemimodule containing `seed` (membership mask over the carrier).
std::vector<bool> subsemimodule_closure(const FiniteSemimodule& m,
                                        std::vector<bool> seed);

bool is_subsemimodule(const FiniteSemimodule& m, const std::vector<bool>& set,
                      std::vector<int>* witness = nullptr);

// All subsemimodules, sorted by (popcount, lexicographic mask). Subset scan
// for carriers up to 20 elements, join-closure of the principal
// subsemimodules above that (exact either way: every subsemimodule is a
// finite join of principal ones).
std::vector<std::vector<bool>> subsemimodules(const FiniteSemimodule& m);

// The subsemimodule generated by one element.
std::vector<bool> principal_subsemimodule(const FiniteSemimodule& m, Elem a);

// Restriction of M to a carrier subset that is a subsemimodule. Element i of
// the result corresponds to the i-th set bit. Throws NotASubsemimodule.
ModulePtr submodule(const FiniteSemimodule& m, const std::vector<bool>& set,
                    std::string name = {});

// Componentwise direct sum of finitely many semimodules over one semiring.
// The carrier is the product, mixed-radix encoded with the first summand
// most significant.
ModulePtr direct_sum_modules(const std::vector<ModulePtr>& parts,
                             int size_cap = kDefaultSizeCap);

// Mixed-radix helpers for the direct-sum carrier.
std::vector<Elem> direct_sum_decode(const std::vector<ModulePtr>& parts,
                                    Elem idx);
Elem direct_sum_encode(const std::vector<ModulePtr>& parts,
                       const std::vector<Elem>& tuple);

}  // namespace semiring_lab
