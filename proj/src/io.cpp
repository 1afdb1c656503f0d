#include "semiring_lab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace semiring_lab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<Elem> flat_table(const json& rows, int size, const char* what) {
  if (!rows.is_array() || rows.size() != static_cast<size_t>(size))
    throw FormatError(std::string(what) + " must be a size x size array");
  std::vector<Elem> out;
  out.reserve(static_cast<size_t>(size) * size);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(size))
      throw FormatError(std::string(what) + " row has the wrong length");
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw FormatError(std::string(what) + " entries must be integers");
      out.push_back(v.get<Elem>());
    }
  }
  return out;
}

ordered_json nested_table(const std::vector<Elem>& flat, int size) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < size; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < size; ++j) row.push_back(flat[i * size + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> element_labels(const json& j, int* size_out) {
  if (!j.contains("elements") || !j["elements"].is_array())
    throw FormatError("missing \"elements\" array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw FormatError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  *size_out = static_cast<int>(labels.size());
  return labels;
}

Elem required_index(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw FormatError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<Elem>();
}

}  // namespace

ordered_json semiring_to_json(const FiniteSemiring& s) {
  ordered_json out;
  out["name"] = s.name;
  out["elements"] = s.labels;
  out["zero"] = s.zero;
  out["one"] = s.one;
  out["add"] = nested_table(s.add_table, s.size);
  out["mul"] = nested_table(s.mul_table, s.size);
  return out;
}

SemiringPtr semiring_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("semiring JSON must be an object");
  int size = 0;
  auto labels = element_labels(j, &size);
  auto add = flat_table(j.value("add", json()), size, "\"add\"");
  auto mul = flat_table(j.value("mul", json()), size, "\"mul\"");
  return validate_semiring(size, std::move(add), std::move(mul),
                           required_index(j, "zero"), required_index(j, "one"),
                           std::move(labels), j.value("name", std::string()));
}

ordered_json module_to_json(const FiniteSemimodule& m) {
  ordered_json out;
  out["name"] = m.name;
  out["elements"] = m.labels;
  out["zero"] = m.zero;
  out["add"] = nested_table(m.add_table, m.size);
  out["ring"] = semiring_to_json(*m.ring);
  ordered_json action = ordered_json::array();
  for (int i = 0; i < m.size; ++i) {
    ordered_json row = ordered_json::array();
    for (int s = 0; s < m.ring->size; ++s)
      row.push_back(m.action_table[i * m.ring->size + s]);
    action.push_back(std::move(row));
  }
  out["action"] = action;
  return out;
}

ModulePtr module_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw FormatError("semimodule JSON must be an object");
  if (!j.contains("ring")) throw FormatError("semimodule needs a \"ring\"");
  SemiringPtr ring;
  if (j["ring"].is_string()) {
    auto path = std::filesystem::path(base_dir) /
                j["ring"].get<std::string>();
    ring = semiring_from_json(load_json_file(path.string()));
  } else {
    ring = semiring_from_json(j["ring"]);
  }
  int size = 0;
  auto labels = element_labels(j, &size);
  auto add = flat_table(j.value("add", json()), size, "\"add\"");
  const auto& action_rows = j.value("action", json());
  if (!action_rows.is_array() || action_rows.size() != static_cast<size_t>(size))
    throw FormatError("\"action\" must have one row per element");
  std::vector<Elem> action;
  for (const auto& row : action_rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(ring->size))
      throw FormatError("\"action\" rows must have |S| entries");
    for (const auto& v : row) action.push_back(v.get<Elem>());
  }
  return validate_semimodule(std::move(ring), size, std::move(add),
                             required_index(j, "zero"), std::move(action),
                             std::move(labels),
                             j.value("name", std::string()));
}

ordered_json lattice_to_json(const FiniteLattice& l) {
  ordered_json out;
  out["name"] = l.name;
  out["elements"] = l.labels;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < l.size; ++i) {
    ordered_json row = ordered_json::array();
    for (int j2 = 0; j2 < l.size; ++j2) row.push_back(l.le(i, j2) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  out["leq"] = rows;
  return out;
}

FiniteLattice lattice_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("lattice JSON must be an object");
  int size = 0;
  auto labels = element_labels(j, &size);
  const auto& rows = j.value("leq", json());
  if (!rows.is_array() || rows.size() != static_cast<size_t>(size))
    throw FormatError("\"leq\" must be a size x size 0/1 array");
  std::vector<bool> leq;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(size))
      throw FormatError("\"leq\" row has the wrong length");
    for (const auto& v : row) leq.push_back(v.get<int>() != 0);
  }
  return validate_lattice(size, std::move(leq), std::move(labels),
                          j.value("name", std::string()));
}

ordered_json congruence_to_json(const Congruence& c) {
  ordered_json out;
  ordered_json blocks = ordered_json::array();
  for (const auto& block : c.blocks()) blocks.push_back(block);
  out["blocks"] = blocks;
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

LoadedStructure load_structure(const std::string& path) {
  json j = load_json_file(path);
  std::string dir = std::filesystem::path(path).parent_path().string();
  if (dir.empty()) dir = ".";
  LoadedStructure out;
  if (j.contains("action")) {
    out.kind = LoadedKind::Semimodule;
    out.module = module_from_json(j, dir);
  } else if (j.contains("leq")) {
    out.kind = LoadedKind::Lattice;
    out.lattice = lattice_from_json(j);
  } else {
    out.kind = LoadedKind::Semiring;
    out.semiring = semiring_from_json(j);
  }
  return out;
}

}  // namespace semiring_lab
