#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// The distinguished element sets. AddIdempotents/Zeroids/AddInvertible make
// sense for semirings and semimodules, MulIdempotents only for semirings.
enum class SubsetKind { AddIdempotents, Zeroids, AddInvertible, MulIdempotents };

// Membership mask over a carrier. The producing operation fixes the parent.
struct ElementSubset {
  std::vector<bool> members;

  int count() const;
  std::vector<Elem> elements() const;
  bool operator==(const ElementSubset&) const = default;
};

// Exact membership by table scan. For semirings the three additive kinds are
// verified to be two-sided ideals, for semimodules subsemimodules; a failure
// is a bug, not bad input.
ElementSubset distinguished_subset(const FiniteSemiring& s, SubsetKind which);
ElementSubset distinguished_subset(const FiniteSemimodule& m, SubsetKind which);

// One decided property: the flag plus a witness (for true flags) or a
// counterexample (for false ones); shape depends on the property.
struct PropertyFlag {
  bool value = false;
  nlohmann::json witness;
};

struct PropertyReport {
  PropertyFlag zeroic;
  PropertyFlag zerosumfree;
  PropertyFlag additively_idempotent;
  PropertyFlag additively_pi_regular;
  PropertyFlag gelfand_right;
  PropertyFlag gelfand_left;
  PropertyFlag anti_bounded;
  PropertyFlag entire;
  PropertyFlag ring;
  PropertyFlag finite_boolean_algebra;
  PropertyFlag right_subtractive;
  PropertyFlag left_subtractive;

  nlohmann::json to_json() const;
  bool flag(const std::string& name) const;
};

PropertyReport classify(const SemiringPtr& s);

// True iff every element has an additive inverse.
bool is_ring(const FiniteSemiring& s);

// Subtractivity of one subsemimodule; on failure fills (m, m') with
// m, m+m' in K and m' outside.
bool is_subtractive(const FiniteSemimodule& m, const std::vector<bool>& set,
                    std::pair<Elem, Elem>* witness = nullptr);

}  // namespace semiring_lab
