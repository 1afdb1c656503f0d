#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/semimodule.hpp"
#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

// The documented file formats. Field order is fixed for byte-reproducible
// output: semirings {name, elements, zero, one, add, mul}; semimodules add
// {ring, action} (ring inline or a path relative to the referencing file);
// lattices {name, elements, leq}; congruences {blocks}.

nlohmann::ordered_json semiring_to_json(const FiniteSemiring& s);
SemiringPtr semiring_from_json(const nlohmann::json& j);

nlohmann::ordered_json module_to_json(const FiniteSemimodule& m);
ModulePtr module_from_json(const nlohmann::json& j,
                           const std::string& base_dir = ".");

nlohmann::ordered_json lattice_to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const nlohmann::json& j);

nlohmann::ordered_json congruence_to_json(const Congruence& c);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

enum class LoadedKind { Semiring, Semimodule, Lattice };

struct LoadedStructure {
  LoadedKind kind = LoadedKind::Semiring;
  SemiringPtr semiring;
  ModulePtr module;
  std::optional<FiniteLattice> lattice;
};

// Detects the kind from the fields present ("action" -> semimodule,
// "leq" -> lattice, otherwise semiring).
LoadedStructure load_structure(const std::string& path);

}  // namespace semiring_lab
