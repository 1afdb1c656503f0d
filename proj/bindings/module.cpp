#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/classify.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/enumeration.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/iso.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/projectivity.hpp"
#include "semiring_lab/simpleness.hpp"
#include "semiring_lab/suites.hpp"

namespace py = pybind11;
using namespace semiring_lab;

namespace {

// The library hands out shared_ptr<const FiniteSemiring>; pybind11 holders
// want the non-const form. The Python surface is read-only, so the cast is
// sound.
using PySemiring = std::shared_ptr<FiniteSemiring>;

PySemiring unconst(const SemiringPtr& s) {
  return std::const_pointer_cast<FiniteSemiring>(s);
}

SemiringPtr side_of(const SemiringPtr& s, const std::string& side) {
  if (side == "right") return s;
  if (side == "left") return opposite(s);
  throw BadParams("side must be 'right' or 'left'");
}

std::vector<PySemiring> unconst_all(const std::vector<SemiringPtr>& in) {
  std::vector<PySemiring> out;
  out.reserve(in.size());
  for (const auto& s : in) out.push_back(unconst(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite semirings, semimodules, and lattices";

  py::register_exception<Error>(m, "AlgebraError");

  py::class_<FiniteSemiring, PySemiring>(m, "Semiring")
      .def_readonly("size", &FiniteSemiring::size)
      .def_readonly("zero", &FiniteSemiring::zero)
      .def_readonly("one", &FiniteSemiring::one)
      .def_readonly("name", &FiniteSemiring::name)
      .def("add", &FiniteSemiring::add, py::arg("a"), py::arg("b"))
      .def("mul", &FiniteSemiring::mul, py::arg("a"), py::arg("b"))
      .def("labels", [](const FiniteSemiring& s) { return s.labels; })
      .def("to_json",
           [](const FiniteSemiring& s) { return semiring_to_json(s).dump(2); })
      .def("__eq__",
           [](const FiniteSemiring& a, const FiniteSemiring& b) {
             return same_semiring(a, b);
           })
      .def("__repr__", [](const FiniteSemiring& s) {
        return "<Semiring " + (s.name.empty() ? "?" : s.name) + " of size " +
               std::to_string(s.size) + ">";
      });

  py::class_<FiniteLattice>(m, "Lattice")
      .def_readonly("size", &FiniteLattice::size)
      .def_readonly("bottom", &FiniteLattice::bottom)
      .def_readonly("top", &FiniteLattice::top)
      .def_readonly("name", &FiniteLattice::name)
      .def("le", &FiniteLattice::le)
      .def("join", &FiniteLattice::join)
      .def("meet", &FiniteLattice::meet)
      .def("labels", [](const FiniteLattice& l) { return l.labels; })
      .def("to_json",
           [](const FiniteLattice& l) { return lattice_to_json(l).dump(2); })
      .def("__repr__", [](const FiniteLattice& l) {
        return "<Lattice " + (l.name.empty() ? "?" : l.name) + " of size " +
               std::to_string(l.size) + ">";
      });

  m.def("construct",
        [](const std::string& spec) { return unconst(construct(spec)); },
        py::arg("spec"), "build a catalog semiring, e.g. 'B3' or 'Ext Z4'");
  m.def("semiring_from_json", [](const std::string& text) {
    return unconst(semiring_from_json(nlohmann::json::parse(text)));
  });
  m.def("validate_semiring",
        [](int size, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
           Elem one) {
          return unconst(validate_semiring(size, std::move(add),
                                           std::move(mul), zero, one));
        },
        py::arg("size"), py::arg("add"), py::arg("mul"), py::arg("zero"),
        py::arg("one"), "validate flattened row-major tables");
  m.def("matrix_semiring", [](const PySemiring& s, int n) {
    return unconst(matrix_semiring(s, n));
  });
  m.def("direct_sum", [](const PySemiring& a, const PySemiring& b) {
    return unconst(direct_sum(a, b));
  });
  m.def("corner_semiring", [](const PySemiring& s, Elem e) {
    return unconst(corner_semiring(s, e));
  });
  m.def("opposite", [](const PySemiring& s) { return unconst(opposite(s)); });
  m.def("classify_json", [](const PySemiring& s) {
    return classify(s).to_json().dump();
  });
  m.def("is_cp_json",
        [](const PySemiring& s, bool exhaustive, const std::string& side) {
          return is_cp(side_of(s, side), exhaustive).to_json().dump();
        },
        py::arg("semiring"), py::arg("exhaustive") = false,
        py::arg("side") = "right");
  m.def("congruence_blocks",
        [](const PySemiring& s, const std::string& kind) {
          auto set = all_congruences(
              *s,
              kind == "semimodule" ? CongruenceKind::Semimodule
                                   : CongruenceKind::Semiring);
          std::vector<std::vector<std::vector<Elem>>> out;
          for (const auto& c : set.congruences) out.push_back(c.blocks());
          return out;
        },
        py::arg("semiring"), py::arg("kind") = "semiring");
  m.def("is_ideal_simple",
        [](const PySemiring& s) { return is_ideal_simple(s); });
  m.def("is_congruence_simple",
        [](const PySemiring& s) { return is_congruence_simple(s); });
  m.def("is_simple", [](const PySemiring& s) { return is_simple(s); });
  m.def("infinite_element",
        [](const PySemiring& s) { return infinite_element(*s); });
  m.def("peirce_decompositions",
        [](const PySemiring& s) { return peirce_decompositions(s); });
  m.def("are_isomorphic", [](const PySemiring& a, const PySemiring& b) {
    return are_isomorphic(*a, *b);
  });
  m.def("matrix_cp_splitting",
        [](const PySemiring& s, int n) -> std::optional<Elem> {
          return matrix_cp_counterexample(s, n).splitting;
        },
        py::arg("semiring"), py::arg("n"),
        "splitting element of the hollow-matrix quotient, None when the "
        "matrix semiring is not CP");
  m.def("enumerate_semirings",
        [](int n) { return unconst_all(enumerate_semirings(n)); });

  m.def("lattice_from_json", [](const std::string& text) {
    return lattice_from_json(nlohmann::json::parse(text));
  });
  m.def("validate_lattice",
        [](int size, std::vector<bool> leq) {
          return validate_lattice(size, std::move(leq));
        },
        py::arg("size"), py::arg("leq"), "flattened row-major order table");
  m.def("chain_lattice", &chain_lattice);
  m.def("diamond_m3", &diamond_m3);
  m.def("pentagon_n5", &pentagon_n5);
  m.def("is_distributive", [](const FiniteLattice& l) {
    return is_distributive(l).distributive;
  });
  m.def("tchain", [](const FiniteLattice& l) { return t_chain(l).members; });
  m.def("tchain_interval_condition", &tchain_interval_condition);
  m.def("quotient_distributivity_condition", [](const FiniteLattice& l) {
    return quotient_distributivity_condition(l);
  });
  m.def("endomorphism_semiring", [](const FiniteLattice& l) {
    return unconst(endomorphism_semiring(l).ring);
  });
  m.def("enumerate_distributive_lattices",
        [](int n) { return enumerate_distributive_lattices(n); });

  m.def("suite_ids", &suite_ids);
  m.def("run_suite_json",
        [](const std::string& id) { return run_suite(id).to_json().dump(); });
}
