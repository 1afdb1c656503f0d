#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiring_lab/catalog.hpp"
#include "semiring_lab/classify.hpp"
#include "semiring_lab/config.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/enumeration.hpp"
#include "semiring_lab/io.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/projectivity.hpp"
#include "semiring_lab/simpleness.hpp"
#include "semiring_lab/suites.hpp"

using namespace semiring_lab;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// exit codes: 0 ok, 1 axiom violation, 2 I/O or format, 3 congruence cap,
// 4 failed verification suite
constexpr int kExitOk = 0;
constexpr int kExitAxiom = 1;
constexpr int kExitIo = 2;
constexpr int kExitCongruenceCap = 3;
constexpr int kExitSuiteFailed = 4;

struct Output {
  bool quiet = false;
  std::string out_path;

  void emit(const ordered_json& payload) const {
    std::string text = payload.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text_file(out_path, text);
    }
  }
  void note(const std::string& line) const {
    if (!quiet) std::cerr << line << "\n";
  }
};

ordered_json to_ordered(const json& j) {
  return ordered_json::parse(j.dump());
}

SemiringPtr load_semiring_or_module_ring(const std::string& path,
                                         bool* was_module = nullptr) {
  auto loaded = load_structure(path);
  if (was_module) *was_module = loaded.kind == LoadedKind::Semimodule;
  if (loaded.kind == LoadedKind::Semiring) return loaded.semiring;
  if (loaded.kind == LoadedKind::Lattice)
    throw KindMismatch("expected a semiring file, found a lattice");
  throw KindMismatch("expected a semiring file, found a semimodule");
}

int cmd_validate(const std::string& path, const Output& out) {
  ordered_json payload;
  try {
    auto loaded = load_structure(path);
    payload["valid"] = true;
    switch (loaded.kind) {
      case LoadedKind::Semiring:
        payload["kind"] = "semiring";
        payload["size"] = loaded.semiring->size;
        break;
      case LoadedKind::Semimodule:
        payload["kind"] = "semimodule";
        payload["size"] = loaded.module->size;
        break;
      case LoadedKind::Lattice:
        payload["kind"] = "lattice";
        payload["size"] = loaded.lattice->size;
        break;
    }
  } catch (const AxiomViolation& e) {
    payload["valid"] = false;
    payload["error"] = "axiom_violation";
    payload["axiom"] = e.axiom();
    payload["witness"] = e.witness();
    out.emit(payload);
    out.note("invalid: " + std::string(e.what()));
    return kExitAxiom;
  } catch (const NotAPoset& e) {
    payload["valid"] = false;
    payload["error"] = "axiom_violation";
    payload["axiom"] = e.what();
    out.emit(payload);
    return kExitAxiom;
  } catch (const NotALattice& e) {
    payload["valid"] = false;
    payload["error"] = "axiom_violation";
    payload["axiom"] = e.what();
    out.emit(payload);
    return kExitAxiom;
  } catch (const Unbounded& e) {
    payload["valid"] = false;
    payload["error"] = "axiom_violation";
    payload["axiom"] = e.what();
    out.emit(payload);
    return kExitAxiom;
  } catch (const ShapeError& e) {
    payload["valid"] = false;
    payload["error"] = "format";
    payload["detail"] = e.what();
    out.emit(payload);
    return kExitIo;
  }
  out.emit(payload);
  out.note("valid " + std::string(payload["kind"]) + " with " +
           std::to_string(int(payload["size"])) + " elements");
  return kExitOk;
}

int cmd_report(const std::string& path, const Output& out) {
  auto s = load_semiring_or_module_ring(path);
  auto rep = classify(s);
  out.emit(to_ordered(rep.to_json()));
  out.note("report for " + s->name);
  return kExitOk;
}

int cmd_check(const std::string& what, const std::string& path,
              const std::string& side, const Config& cfg, const Output& out) {
  auto s = load_semiring_or_module_ring(path);
  if (side == "left") s = opposite(s);
  ordered_json payload;
  if (what == "cp") {
    auto v = is_cp(s, false, cfg.congruence_cap);
    payload = to_ordered(v.to_json());
  } else if (what == "congruence_simple") {
    payload["congruence_simple"] = is_congruence_simple(s, cfg.congruence_cap);
  } else if (what == "ideal_simple") {
    payload["ideal_simple"] = is_ideal_simple(s);
  } else if (what == "simple") {
    payload["congruence_simple"] = is_congruence_simple(s, cfg.congruence_cap);
    payload["ideal_simple"] = is_ideal_simple(s);
    payload["simple"] = bool(payload["congruence_simple"]) &&
                        bool(payload["ideal_simple"]);
  } else {
    throw BadParams("unknown check: " + what);
  }
  out.emit(payload);
  return kExitOk;
}

int cmd_congruences(const std::string& path, const std::string& kind,
                    const Config& cfg, const Output& out) {
  auto loaded = load_structure(path);
  CongruenceSet set;
  if (loaded.kind == LoadedKind::Semimodule) {
    set = all_congruences(*loaded.module, cfg.congruence_cap);
  } else if (loaded.kind == LoadedKind::Lattice) {
    set = lattice_congruences(*loaded.lattice, cfg.congruence_cap);
  } else {
    auto k = kind == "semimodule" ? CongruenceKind::Semimodule
                                  : CongruenceKind::Semiring;
    set = all_congruences(*loaded.semiring, k, cfg.congruence_cap);
  }
  ordered_json payload;
  payload["count"] = set.congruences.size();
  payload["complete"] = set.complete;
  ordered_json arr = ordered_json::array();
  for (const auto& c : set.congruences) arr.push_back(congruence_to_json(c));
  payload["congruences"] = arr;
  out.emit(payload);
  out.note(std::to_string(set.congruences.size()) + " congruences");
  return kExitOk;
}

int cmd_construct(const std::vector<std::string>& tokens, const Config& cfg,
                  const Output& out) {
  auto s = construct(tokens, cfg.size_cap);
  out.emit(semiring_to_json(*s));
  out.note("constructed " + s->name + " with " + std::to_string(s->size) +
           " elements");
  return kExitOk;
}

int cmd_enumerate(const std::string& kind, int order,
                  const std::string& predicate, const std::string& out_dir,
                  const Config& cfg, const Output& out) {
  if (kind == "monoids") {
    auto monoids = enumerate_commutative_monoids(order, cfg.max_monoid_order);
    ordered_json payload;
    payload["order"] = order;
    payload["count"] = monoids.size();
    ordered_json arr = ordered_json::array();
    for (const auto& m : monoids) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < m.size; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.size; ++j) row.push_back(m.add[i * m.size + j]);
        rows.push_back(std::move(row));
      }
      arr.push_back(ordered_json{{"add", rows}});
    }
    payload["monoids"] = arr;
    out.emit(payload);
    return kExitOk;
  }
  if (kind != "semirings") throw BadParams("unknown enumeration kind: " + kind);
  auto all = enumerate_semirings(order, cfg.max_semiring_order);
  std::vector<SemiringPtr> kept;
  for (const auto& s : all) {
    bool keep = true;
    if (!predicate.empty()) {
      if (predicate == "cp")
        keep = is_cp(s, false, cfg.congruence_cap).is_cp;
      else if (predicate == "simple")
        keep = is_simple(s, cfg.congruence_cap);
      else if (predicate == "congruence_simple")
        keep = is_congruence_simple(s, cfg.congruence_cap);
      else if (predicate == "ideal_simple")
        keep = is_ideal_simple(s);
      else
        keep = classify(s).flag(predicate);
    }
    if (keep) kept.push_back(s);
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (size_t i = 0; i < kept.size(); ++i) {
      FiniteSemiring named = *kept[i];
      named.name = "semiring_order" + std::to_string(order) + "_" +
                   std::to_string(i);
      auto path = std::filesystem::path(out_dir) / (named.name + ".json");
      write_text_file(path.string(), semiring_to_json(named).dump(2) + "\n");
    }
    out.note("wrote " + std::to_string(kept.size()) + " files to " + out_dir);
    ordered_json payload;
    payload["count"] = kept.size();
    payload["directory"] = out_dir;
    out.emit(payload);
  } else {
    // stream one JSON object per line
    for (const auto& s : kept) std::cout << semiring_to_json(*s).dump() << "\n";
    out.note(std::to_string(kept.size()) + " semirings of order " +
             std::to_string(order));
  }
  return kExitOk;
}

int cmd_lattice(const std::string& sub, const std::string& path,
                const Config& cfg, const Output& out) {
  auto loaded = load_structure(path);
  if (sub == "decompose-510") {
    if (loaded.kind != LoadedKind::Semimodule)
      throw KindMismatch("decompose-510 expects a semimodule file");
    auto dec = boolean_base_decomposition(loaded.module);
    ordered_json payload;
    payload["base_quotient"] = semiring_to_json(*dec.base_quotient);
    payload["annihilator"] = dec.annihilator;
    ordered_json comps = ordered_json::array();
    for (const auto& c : dec.components) {
      ordered_json e;
      e["atom_rep"] = c.atom_rep;
      e["lattice"] = lattice_to_json(c.lattice);
      e["tchain_condition"] = tchain_interval_condition(c.lattice);
      comps.push_back(std::move(e));
    }
    payload["components"] = comps;
    out.emit(payload);
    return kExitOk;
  }
  if (loaded.kind != LoadedKind::Lattice)
    throw KindMismatch("lattice commands expect a lattice file");
  const FiniteLattice& l = *loaded.lattice;
  if (sub == "check-59") {
    ordered_json payload;
    auto dist = is_distributive(l);
    payload["distributive"] = dist.distributive;
    if (!dist.distributive) {
      payload["forbidden_kind"] = dist.forbidden_kind;
      payload["forbidden_sublattice"] = dist.forbidden_sublattice;
      out.emit(payload);
      out.note("not distributive");
      return kExitOk;
    }
    bool c2 = quotient_distributivity_condition(l, cfg.congruence_cap);
    bool c3 = tchain_interval_condition(l);
    payload["quotient_condition"] = c2;
    payload["tchain_condition"] = c3;
    payload["conditions_agree"] = c2 == c3;
    auto t = t_chain(l);
    payload["tchain"] = t.members;
    out.emit(payload);
    return kExitOk;
  }
  if (sub == "endo") {
    auto endo = endomorphism_semiring(l, cfg.size_cap);
    out.emit(semiring_to_json(*endo.ring));
    out.note("|End| = " + std::to_string(endo.ring->size));
    return kExitOk;
  }
  throw BadParams("unknown lattice subcommand: " + sub);
}

int cmd_verify(const std::string& id, const Config& cfg, const Output& out) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = suite_ids();
  } else {
    ids.push_back(id);
  }
  bool all_passed = true;
  ordered_json reports = ordered_json::array();
  for (const auto& sid : ids) {
    auto report = run_suite(sid, cfg);
    all_passed = all_passed && report.passed();
    for (const auto& item : report.items)
      out.note("[" + sid + "] " + item.status + ": " + item.description +
               (item.skip_reason.empty() ? "" : " (" + item.skip_reason + ")"));
    reports.push_back(to_ordered(report.to_json()));
  }
  out.emit(ids.size() == 1 ? reports[0] : ordered_json{{"suites", reports}});
  return all_passed ? kExitOk : kExitSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semiring, semimodule, and lattice workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output out;
  std::string config_path;
  app.add_flag("--quiet", out.quiet, "suppress the stderr summary");
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("-o,--out", out.out_path, "write the JSON payload here");

  std::string path, side = "right", kind = "semiring", what;
  std::vector<std::string> tokens;
  int order = 2;
  std::string predicate, out_dir, suite;

  auto* validate = app.add_subcommand("validate", "validate a structure file");
  validate->add_option("path", path)->required();

  auto* report = app.add_subcommand("report", "property report of a semiring");
  report->add_option("path", path)->required();

  auto* check = app.add_subcommand("check", "decide cp/simpleness properties");
  check->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"cp", "simple", "congruence_simple",
                             "ideal_simple"}));
  check->add_option("path", path)->required();
  check->add_option("--side", side)->check(CLI::IsMember({"right", "left"}));

  auto* congr = app.add_subcommand("congruences", "enumerate congruences");
  congr->add_option("path", path)->required();
  congr->add_option("--kind", kind)
      ->check(CLI::IsMember({"semiring", "semimodule"}));

  auto* cons = app.add_subcommand("construct", "build a catalog semiring");
  cons->add_option("id", tokens, "catalog id and parameters")->required();

  auto* enumc = app.add_subcommand("enumerate", "enumerate small structures");
  enumc->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"semirings", "monoids"}));
  enumc->add_option("--order", order)->required();
  enumc->add_option("--predicate", predicate);
  enumc->add_option("--dir", out_dir, "write one JSON file per structure");

  auto* lat = app.add_subcommand("lattice", "lattice checks");
  lat->require_subcommand(1);
  auto* lat59 = lat->add_subcommand("check-59", "distributivity conditions");
  lat59->add_option("path", path)->required();
  auto* latendo = lat->add_subcommand("endo", "endomorphism semiring");
  latendo->add_option("path", path)->required();
  auto* latdec = lat->add_subcommand("decompose-510", "Boolean base components");
  latdec->add_option("path", path)->required();

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite id or 'all'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = config_path.empty() ? load_config_from_env()
                                     : load_config_file(config_path);
    if (validate->parsed()) return cmd_validate(path, out);
    if (report->parsed()) return cmd_report(path, out);
    if (check->parsed()) return cmd_check(what, path, side, cfg, out);
    if (congr->parsed()) return cmd_congruences(path, kind, cfg, out);
    if (cons->parsed()) return cmd_construct(tokens, cfg, out);
    if (enumc->parsed())
      return cmd_enumerate(kind, order, predicate, out_dir, cfg, out);
    if (lat->parsed()) {
      if (lat59->parsed()) return cmd_lattice("check-59", path, cfg, out);
      if (latendo->parsed()) return cmd_lattice("endo", path, cfg, out);
      return cmd_lattice("decompose-510", path, cfg, out);
    }
    if (verify->parsed()) return cmd_verify(suite, cfg, out);
  } catch (const CongruenceLimitExceeded& e) {
    ordered_json payload{{"error", "congruence_limit_exceeded"},
                         {"cap", e.cap()}};
    std::cout << payload.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kExitCongruenceCap;
  } catch (const AxiomViolation& e) {
    ordered_json payload{{"error", "axiom_violation"},
                         {"axiom", e.axiom()},
                         {"witness", e.witness()}};
    std::cout << payload.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kExitAxiom;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
