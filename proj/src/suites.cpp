#include "semiring_lab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/classify.hpp"
#include "semiring_lab/congruence.hpp"
#include "semiring_lab/enumeration.hpp"
#include "semiring_lab/iso.hpp"
#include "semiring_lab/lattice.hpp"
#include "semiring_lab/projectivity.hpp"
#include "semiring_lab/simpleness.hpp"

namespace semiring_lab {

using nlohmann::json;

bool SuiteReport::passed() const {
  return std::none_of(items.begin(), items.end(),
                      [](const SuiteItem& i) { return i.status == "fail"; });
}

json SuiteReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["wall_seconds"] = wall_seconds;
  json arr = json::array();
  for (const auto& i : items) {
    json e{{"description", i.description}, {"status", i.status}};
    if (!i.skip_reason.empty()) e["skip_reason"] = i.skip_reason;
    if (!i.witness.is_null()) e["witness"] = i.witness;
    arr.push_back(std::move(e));
  }
  out["items"] = arr;
  return out;
}

std::vector<std::pair<std::string, SemiringPtr>> suite_catalog(
    const Config& cfg) {
  std::vector<std::pair<std::string, SemiringPtr>> out;
  for (const char* id :
       {"trivial", "B", "Z2", "Z3", "B3", "B31", "Z4", "Bk 2", "Ext Z2",
        "Sum Z2 B", "Ext Z3", "Z6", "Ext Z4", "Bk 3", "Ext Z6", "MatB 2",
        "Mat Z2 2"})
    out.emplace_back(id, construct(std::string(id), cfg.size_cap));
  return out;
}

namespace {

struct Runner {
  SuiteReport report;
  const Config& cfg;

  explicit Runner(std::string id, const Config& c) : cfg(c) {
    report.suite = std::move(id);
  }
  void item(const std::string& desc, bool ok, json witness = json()) {
    report.items.push_back(
        {desc, ok ? "pass" : "fail", "", std::move(witness)});
  }
  void skip(const std::string& desc, const std::string& reason) {
    report.items.push_back({desc, "skipped", reason, json()});
  }
};

// Deterministic work distribution: every item writes its own slot, items
// are pure, results are consumed in index order afterwards.
template <typename F>
void parallel_for(int n, int threads, F&& f) {
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (int i; (i = next.fetch_add(1)) < n;) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool cp(const SemiringPtr& s, const Config& cfg) {
  return is_cp(s, false, cfg.congruence_cap).is_cp;
}

bool iso(const FiniteSemiring& a, const FiniteSemiring& b) {
  return are_isomorphic(a, b).has_value();
}

// Catalog plus every semiring of order <= 3 up to isomorphism.
std::vector<std::pair<std::string, SemiringPtr>> universe(const Config& cfg) {
  auto out = suite_catalog(cfg);
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_semirings(n, std::max(3, cfg.max_semiring_order));
    for (size_t i = 0; i < all.size(); ++i)
      out.emplace_back("order" + std::to_string(n) + "#" + std::to_string(i),
                       all[i]);
  }
  return out;
}

std::vector<SemiringPtr> rings_of_order(int k, const Config& cfg) {
  std::vector<SemiringPtr> out;
  if (k <= cfg.max_semiring_order && k <= 4) {
    for (const auto& s : enumerate_semirings(k, cfg.max_semiring_order))
      if (is_ring(*s)) out.push_back(s);
    return out;
  }
  // catalog-bounded fallback: cyclic rings and their two-factor products
  out.push_back(zn(k));
  for (int a = 2; a * 2 <= k; ++a)
    if (k % a == 0) out.push_back(direct_sum(zn(a), zn(k / a), cfg.size_cap));
  return out;
}

// ---------------------------------------------------------------- thm-3.1

std::vector<std::pair<std::string, ModulePtr>> colimit_corpus(
    const Config& cfg) {
  std::vector<std::pair<std::string, ModulePtr>> out;
  for (const char* id :
       {"trivial", "B", "Z2", "Z3", "B3", "B31", "Z4", "Bk 2", "Z6", "Ext Z2",
        "Ext Z3", "Ext Z4", "Sum Z2 B", "Bk 3"})
    out.emplace_back(std::string("regular ") + id,
                     regular_semimodule(construct(std::string(id), cfg.size_cap)));
  for (const char* id : {"B", "B3", "B31", "Z4"}) {
    auto s = construct(std::string(id), cfg.size_cap);
    auto qs = cyclic_quotients(s, cfg.congruence_cap);
    for (size_t i = 0; i < qs.size(); ++i)
      out.emplace_back(std::string(id) + " cyclic#" + std::to_string(i),
                       qs[i].quotient);
  }
  auto regb = regular_semimodule(boolean_semifield());
  out.emplace_back("B^2 over B", direct_sum_modules({regb, regb}, cfg.size_cap));
  out.emplace_back("B^3 over B",
                   direct_sum_modules({regb, regb, regb}, cfg.size_cap));
  return out;
}

bool colimit_recovers(const ModulePtr& m, const Config& cfg, json* witness) {
  auto cd = full_c_diagram(m);
  auto col = colimit(cd.diagram, cfg.size_cap);
  std::vector<SemimoduleHom> inclusions;
  for (size_t i = 0; i < cd.diagram.nodes.size(); ++i)
    inclusions.push_back(
        validate_hom(cd.diagram.nodes[i], m, cd.node_elements[i]));
  auto u = mediating_hom(cd.diagram, col, inclusions);
  if (!u) {
    *witness = json{{"reason", "no mediating hom onto the inclusions"}};
    return false;
  }
  if (!is_surjective(*u) || !is_injective(*u)) {
    *witness = json{{"reason", "mediating hom is not bijective"},
                    {"colimit_size", col.colimit->size},
                    {"module_size", m->size}};
    return false;
  }
  return true;
}

void suite_thm_3_1(Runner& r) {
  auto corpus = colimit_corpus(r.cfg);
  std::vector<std::pair<bool, json>> results(corpus.size());
  parallel_for(static_cast<int>(corpus.size()), r.cfg.threads, [&](int i) {
    results[i].first = colimit_recovers(corpus[i].second, r.cfg,
                                        &results[i].second);
  });
  for (size_t i = 0; i < corpus.size(); ++i)
    r.item("colimit of the full c-diagram recovers " + corpus[i].first,
           results[i].first, results[i].second);
}

// ---------------------------------------------------------------- prop-3.5

void suite_prop_3_5(Runner& r) {
  for (auto& [name, s] : suite_catalog(r.cfg)) {
    if (!cp(s, r.cfg)) continue;
    auto set = all_congruences(*s, CongruenceKind::Semiring, r.cfg.congruence_cap);
    bool ok = true;
    json w;
    for (const auto& c : set.congruences) {
      auto q = quotient_semiring(s, c);
      if (!cp(q.quotient, r.cfg)) {
        ok = false;
        w = json{{"blocks", c.blocks()}};
        break;
      }
    }
    r.item("every quotient of CP " + name + " is CP (" +
               std::to_string(set.congruences.size()) + " congruences)",
           ok, w);
  }
}

// ----------------------------------------------------------------- cor-3.6

void suite_cor_3_6(Runner& r) {
  const std::pair<const char*, const char*> pairs[] = {
      {"B", "B"},   {"Z2", "B3"}, {"Z4", "B"},  {"B31", "Z2"},
      {"B3", "B31"}, {"Z4", "Z4"}, {"Z3", "B31"}, {"trivial", "B3"}};
  for (auto& [ida, idb] : pairs) {
    auto a = construct(std::string(ida), r.cfg.size_cap);
    auto b = construct(std::string(idb), r.cfg.size_cap);
    bool lhs = cp(direct_sum(a, b, r.cfg.size_cap), r.cfg);
    bool rhs = cp(a, r.cfg) && cp(b, r.cfg);
    r.item(std::string("CP(") + ida + " + " + idb + ") equals CP(" + ida +
               ") and CP(" + idb + ")",
           lhs == rhs, json{{"sum", lhs}, {"factors", rhs}});
  }
}

// ---------------------------------------------------------------- prop-3.10

void suite_prop_3_10(Runner& r) {
  int scanned = 0;
  for (auto& [name, s] : universe(r.cfg)) {
    auto rep = classify(s);
    if (!rep.zerosumfree.value || !cp(s, r.cfg)) continue;
    ++scanned;
    r.item(name + ": zeroic", rep.zeroic.value, rep.zeroic.witness);
    r.item(name + ": additively pi-regular", rep.additively_pi_regular.value,
           rep.additively_pi_regular.witness);
    auto diamond = diamond_congruence(*s);
    auto e = splitting_idempotent(*s, as_module_congruence(diamond));
    bool image_ok = false;
    if (e) {
      std::vector<bool> image(s->size, false);
      for (Elem x = 0; x < s->size; ++x) image[s->mul(*e, x)] = true;
      image_ok =
          image == distinguished_subset(*s, SubsetKind::AddIdempotents).members;
    }
    r.item(name + ": additive idempotents split off the diamond quotient",
           e.has_value() && image_ok, e ? json(*e) : json());
    r.item(name + ": Bourne congruence of the additive idempotents is universal",
           theta_plus_congruence(s).is_universal());
  }
  r.item("scan covered at least the zerosumfree CP catalog", scanned >= 8,
         json{{"scanned", scanned}});
}

// ---------------------------------------------------------------- thm-3.11

bool decomposes_ring_plus_zeroic(const SemiringPtr& s, const Config& cfg) {
  for (auto [e, f] : peirce_decompositions(s)) {
    auto ce = corner_or_trivial(s, e);
    auto cf = corner_or_trivial(s, f);
    if (!is_ring(*ce) || !cp(ce, cfg)) continue;
    auto repf = classify(cf);
    if (repf.zeroic.value && repf.additively_pi_regular.value && cp(cf, cfg))
      return true;
  }
  return false;
}

void suite_thm_3_11(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    bool lhs = cp(s, r.cfg);
    bool rhs = decomposes_ring_plus_zeroic(s, r.cfg);
    r.item(name + ": CP iff a Peirce pair splits off a CP ring and a zeroic "
                  "pi-regular CP part",
           lhs == rhs, json{{"cp", lhs}, {"decomposes", rhs}});
  }
}

// ----------------------------------------------------------------- thm-4.1

void suite_thm_4_1(Runner& r) {
  for (const char* id : {"B", "B3"}) {
    auto s = construct(std::string(id), r.cfg.size_cap);
    auto t = matrix_semiring(s, 2, r.cfg.size_cap);
    auto cs = all_congruences(*s, CongruenceKind::Semiring, r.cfg.congruence_cap);
    auto ct = all_congruences(*t, CongruenceKind::Semiring, r.cfg.congruence_cap);
    std::vector<Congruence> lifted;
    for (const auto& theta : cs.congruences)
      lifted.push_back(matrix_congruence_lift(s, theta, 2, t));
    std::set<std::vector<Elem>> lifted_set, direct_set;
    for (const auto& c : lifted) lifted_set.insert(c.block_of);
    for (const auto& c : ct.congruences) direct_set.insert(c.block_of);
    r.item(std::string("lift maps Cong(") + id + ") onto Cong(M2(" + id +
               ")) bijectively",
           lifted_set == direct_set &&
               lifted_set.size() == cs.congruences.size(),
           json{{"base", cs.congruences.size()},
                {"matrix", ct.congruences.size()}});
    bool order_ok = true;
    for (size_t i = 0; i < lifted.size() && order_ok; ++i)
      for (size_t j = 0; j < lifted.size() && order_ok; ++j)
        order_ok = refines(cs.congruences[i], cs.congruences[j]) ==
                   refines(lifted[i], lifted[j]);
    r.item(std::string("lift preserves and reflects refinement over ") + id,
           order_ok);
    bool quot_ok = true;
    for (size_t i = 0; i < lifted.size() && quot_ok; ++i) {
      auto qt = quotient_semiring(t, lifted[i]);
      auto qs = quotient_semiring(s, cs.congruences[i]);
      quot_ok = iso(*qt.quotient,
                    *matrix_semiring(qs.quotient, 2, r.cfg.size_cap));
    }
    r.item(std::string("M2(") + id + ")/lift(theta) is M2(" + id + "/theta)",
           quot_ok);
  }
}

// ----------------------------------------------------------------- prop-4.2

void suite_prop_4_2(Runner& r) {
  for (auto& [id, n] : std::vector<std::pair<const char*, int>>{
           {"B", 3}, {"B3", 3}, {"B", 4}}) {
    auto s = construct(std::string(id), r.cfg.size_cap);
    auto w = matrix_cp_counterexample(s, n);
    r.item("hollow-matrix quotient of M" + std::to_string(n) + "(" + id +
               ") admits no splitting idempotent",
           !w.splitting.has_value(),
           json{{"matrix_size", w.matrix_size},
                {"kernel_blocks", w.kernel.num_blocks()}});
  }
}

// ----------------------------------------------------------------- prop-4.3

void suite_prop_4_3(Runner& r) {
  auto b = boolean_semifield();
  r.item("B is CP", cp(b, r.cfg));
  r.item("M1(B) is B", iso(*matrix_semiring(b, 1, r.cfg.size_cap), *b));
  r.item("M2(B) is CP", cp(matrix_semiring(b, 2, r.cfg.size_cap), r.cfg));
  r.item("M3(B) is not CP (hollow-matrix certificate)",
         !matrix_cp_counterexample(b, 3).splitting.has_value());
  r.item("M1(Z2) = Z2 is CP", cp(zn(2), r.cfg));
  r.item("M2(Z2) is CP (matrix ring over a field)",
         cp(matrix_semiring(zn(2), 2, r.cfg.size_cap), r.cfg));
  r.item("M1(Z3) = Z3 is CP", cp(zn(3), r.cfg));
}

// ----------------------------------------------------------------- thm-4.4

void suite_thm_4_4(Runner& r) {
  const std::pair<const char*, bool> cases[] = {
      {"B", true},          {"MatB 2", true},     {"Z2", true},
      {"Z3", true},         {"Z6", true},         {"Mat Z2 2", true},
      {"Sum Z2 B", true},   {"Sum B MatB 2", true}};
  for (auto& [id, expect] : cases)
    r.item(std::string("semisimple ") + id + (expect ? " is CP" : " is not CP"),
           cp(construct(std::string(id), r.cfg.size_cap), r.cfg) == expect);
  r.item("semisimple M3(B) is not CP",
         !matrix_cp_counterexample(boolean_semifield(), 3).splitting.has_value());
}

// ----------------------------------------------------------------- thm-4.9

void suite_thm_4_9(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    auto rep = classify(s);
    bool lhs = rep.gelfand_right.value && cp(s, r.cfg);
    bool rhs = rep.finite_boolean_algebra.value;
    r.item(name + ": right Gelfand CP iff finite Boolean algebra", lhs == rhs,
           json{{"gelfand_cp", lhs}, {"boolean", rhs}});
  }
}

// ---------------------------------------------------------------- thm-4.10

bool decomposes_ring_plus_boolean(const SemiringPtr& s, const Config& cfg) {
  for (auto [e, f] : peirce_decompositions(s)) {
    auto ce = corner_or_trivial(s, e);
    auto cf = corner_or_trivial(s, f);
    if (is_ring(*ce) && cp(ce, cfg) &&
        classify(cf).finite_boolean_algebra.value)
      return true;
  }
  return false;
}

void suite_thm_4_10(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    bool lhs = classify(s).right_subtractive.value && cp(s, r.cfg);
    bool rhs = decomposes_ring_plus_boolean(s, r.cfg);
    r.item(name +
               ": right subtractive CP iff a Peirce pair splits off a CP ring "
               "and a Boolean algebra",
           lhs == rhs, json{{"subtractive_cp", lhs}, {"decomposes", rhs}});
  }
}

// ---------------------------------------------------------------- cor-4.11

void suite_cor_4_11(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    if (!classify(s).right_subtractive.value) continue;
    bool a = is_congruence_simple(s, r.cfg.congruence_cap) && cp(s, r.cfg);
    bool b = is_ideal_simple(s) && cp(s, r.cfg);
    bool c = (is_ring(*s) && is_simple(s, r.cfg.congruence_cap)) ||
             iso(*s, *boolean_semifield());
    r.item(name + ": congruence-simple CP, ideal-simple CP, and "
                  "matrix-ring-or-B agree",
           a == b && b == c, json{{"cong_cp", a}, {"ideal_cp", b}, {"named", c}});
  }
}

// --------------------------------------------------------------- facts-4.12

void suite_facts_4_12(Runner& r) {
  auto b3 = chain_semiring_b3();
  auto b31 = truncated_naturals_b31();
  r.item("the max-times chain on three elements is CP", cp(b3, r.cfg));
  r.item("the truncated naturals on three elements are CP", cp(b31, r.cfg));
  auto qs = cyclic_quotients(b3, r.cfg.congruence_cap);
  std::multiset<int> sizes;
  for (const auto& q : qs) sizes.insert(q.quotient->size);
  r.item("B3 has cyclic semimodules of sizes 1, 2, 3 only",
         sizes == std::multiset<int>{1, 2, 3});
  bool retracts = true;
  for (const auto& q : qs)
    retracts = retracts && is_projective(q.quotient);
  r.item("every cyclic B3-semimodule is a retract of the regular one",
         retracts);
}

// ---------------------------------------------------------------- prop-4.13

void suite_prop_4_13(Runner& r) {
  for (int n : {1, 2, 3, 4, 6, 8}) {
    auto ring = zn(n);
    bool lhs = cp(ext_of_ring(ring), r.cfg);
    bool rhs = cp(ring, r.cfg);
    r.item("Ext(Z" + std::to_string(n) + ") is CP iff Z" + std::to_string(n) +
               " is a CP ring",
           lhs == rhs, json{{"ext", lhs}, {"ring", rhs}});
  }
}

// ---------------------------------------------------------------- thm-4.16

bool is_ext_of_some_ring(const SemiringPtr& t, const Config& cfg) {
  if (t->size < 3) return false;
  for (const auto& ring : rings_of_order(t->size - 2, cfg))
    if (iso(*t, *ext_of_ring(ring))) return true;
  return false;
}

bool anti_bounded_rhs(const SemiringPtr& s, const Config& cfg) {
  for (auto [e, f] : peirce_decompositions(s)) {
    auto ce = corner_or_trivial(s, e);
    auto cf = corner_or_trivial(s, f);
    if (!is_ring(*ce) || !cp(ce, cfg)) continue;
    if (cf->size == 1 || iso(*cf, *boolean_semifield()) ||
        iso(*cf, *chain_semiring_b3()) || iso(*cf, *truncated_naturals_b31()))
      return true;
    if (cp(cf, cfg) && is_ext_of_some_ring(cf, cfg)) return true;
  }
  return false;
}

void suite_thm_4_16(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    if (!classify(s).anti_bounded.value) continue;
    bool lhs = cp(s, r.cfg);
    bool rhs = anti_bounded_rhs(s, r.cfg);
    r.item(name + ": anti-bounded CP iff ring part plus B/B3/B31/Ext part",
           lhs == rhs, json{{"cp", lhs}, {"named", rhs}});
  }
}

// ---------------------------------------------------------------- thm-4.17

void suite_thm_4_17(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    if (!classify(s).anti_bounded.value) continue;
    bool c1 = is_congruence_simple(s, r.cfg.congruence_cap);
    bool c2 = is_ideal_simple(s);
    bool c3 = (is_ring(*s) && is_simple(s, r.cfg.congruence_cap)) ||
              iso(*s, *boolean_semifield());
    r.item(name + ": congruence-simple, ideal-simple, and simple-ring-or-B "
                  "agree for anti-bounded semirings",
           c1 == c2 && c2 == c3,
           json{{"congruence_simple", c1}, {"ideal_simple", c2}, {"named", c3}});
  }
}

// ----------------------------------------------------------------- prop-5.1

void suite_prop_5_1(Runner& r) {
  for (auto& [name, s] : suite_catalog(r.cfg)) {
    if (!cp(s, r.cfg)) continue;
    auto idem = distinguished_subset(*s, SubsetKind::MulIdempotents);
    bool ok = true;
    json w;
    for (Elem e : idem.elements()) {
      if (e == s->zero) continue;
      if (!cp(corner_semiring(s, e), r.cfg)) {
        ok = false;
        w = json{{"idempotent", e}};
        break;
      }
    }
    r.item("corners of CP " + name + " are CP (" +
               std::to_string(idem.count()) + " idempotents)",
           ok, w);
  }
}

// ----------------------------------------------------------- facts-5.4-5.5

void suite_facts_5_4_5_5(Runner& r) {
  for (auto& [name, lattice] :
       std::vector<std::pair<const char*, FiniteLattice>>{
           {"diamond", diamond_m3()}, {"pentagon", pentagon_n5()}}) {
    auto endo = endomorphism_semiring(lattice, r.cfg.size_cap);
    auto verdict = is_cp(endo.ring, false, r.cfg.congruence_cap);
    r.item(std::string("End(") + name + ") is not CP", !verdict.is_cp,
           json{{"end_size", endo.ring->size},
                {"witness_blocks",
                 verdict.witness ? json(verdict.witness->num_blocks()) : json()}});
  }
}

// ----------------------------------------------------------------- prop-5.7

void suite_prop_5_7(Runner& r) {
  for (const auto& lattice : enumerate_distributive_lattices(3, r.cfg.size_cap)) {
    std::string name = lattice.name + "[" + std::to_string(lattice.size) + "]";
    EndomorphismSemiring endo;
    try {
      endo = endomorphism_semiring(lattice, 256);
    } catch (const SizeCapExceeded&) {
      r.skip("quotient transfer for " + name,
             "endomorphism semiring above 256 elements");
      continue;
    }
    if (!cp(endo.ring, r.cfg)) {
      r.item("quotient transfer for " + name + " (premise false)", true);
      continue;
    }
    bool ok = true;
    json w;
    auto congs = lattice_congruences(lattice, r.cfg.congruence_cap);
    for (const auto& theta : congs.congruences) {
      auto q = quotient_semimodule(as_semimodule(lattice), theta);
      auto ql = lattice_from_module(*q.quotient);
      if (!cp(endomorphism_semiring(ql, 256).ring, r.cfg)) {
        ok = false;
        w = json{{"blocks", theta.blocks()}};
        break;
      }
    }
    r.item("CP endomorphisms transfer to all " +
               std::to_string(congs.congruences.size()) + " quotients of " +
               name,
           ok, w);
  }
}

// ----------------------------------------------------------------- prop-5.8

void suite_prop_5_8(Runner& r) {
  auto with_top = [](const FiniteLattice& l) {
    const int n = l.size + 1;
    std::vector<bool> leq(static_cast<size_t>(n) * n, false);
    for (Elem a = 0; a < l.size; ++a)
      for (Elem b = 0; b < l.size; ++b) leq[a * n + b] = l.le(a, b);
    for (Elem a = 0; a < n; ++a) {
      leq[a * n + a] = true;
      leq[a * n + (n - 1)] = true;
    }
    return validate_lattice(n, std::move(leq), {}, l.name + "+top");
  };
  auto with_bottom = [](const FiniteLattice& l) {
    const int n = l.size + 1;
    std::vector<bool> leq(static_cast<size_t>(n) * n, false);
    for (Elem a = 0; a < l.size; ++a)
      for (Elem b = 0; b < l.size; ++b) leq[(a + 1) * n + (b + 1)] = l.le(a, b);
    for (Elem a = 0; a < n; ++a) {
      leq[a * n + a] = true;
      leq[0 * n + a] = true;
    }
    return validate_lattice(n, std::move(leq), {}, l.name + "+bottom");
  };
  std::vector<FiniteLattice> family = {diamond_m3(), pentagon_n5(),
                                       with_top(diamond_m3()),
                                       with_bottom(pentagon_n5())};
  for (const auto& lattice : family) {
    auto report = is_distributive(lattice);
    auto endo = endomorphism_semiring(lattice, r.cfg.size_cap);
    bool lat_cp = cp(endo.ring, r.cfg);
    r.item("non-distributive " + lattice.name + " has non-CP endomorphisms",
           !report.distributive && !lat_cp,
           json{{"forbidden", report.forbidden_kind},
                {"end_size", endo.ring->size}});
  }
  for (const auto& lattice : enumerate_distributive_lattices(2, r.cfg.size_cap))
    r.item(lattice.name + " distributive (implication holds vacuously or directly)",
           is_distributive(lattice).distributive);
}

// ----------------------------------------------------------------- thm-5.9

void suite_thm_5_9(Runner& r) {
  auto family = enumerate_distributive_lattices(4, r.cfg.size_cap);
  struct Sweep {
    bool c2 = false, c3 = false, c1 = false;
    int end_size = -1;  // -1: above the |M| <= 6 bound
  };
  std::vector<Sweep> results(family.size());
  parallel_for(static_cast<int>(family.size()), r.cfg.threads, [&](int i) {
    const auto& lattice = family[i];
    auto& out = results[i];
    out.c2 = quotient_distributivity_condition(lattice, r.cfg.congruence_cap);
    out.c3 = tchain_interval_condition(lattice);
    if (lattice.size <= 6) {
      auto endo = endomorphism_semiring(lattice, r.cfg.size_cap);
      out.end_size = endo.ring->size;
      out.c1 = cp(endo.ring, r.cfg);
    }
  });
  for (size_t i = 0; i < family.size(); ++i) {
    const auto& lattice = family[i];
    const auto& out = results[i];
    std::string name =
        lattice.name + "[" + std::to_string(lattice.size) + "]";
    r.item(name + ": quotient-distributivity matches the T-chain condition",
           out.c2 == out.c3, json{{"quotients", out.c2}, {"tchain", out.c3}});
    if (out.end_size >= 0) {
      r.item(name + ": End CP matches the T-chain condition (|End| = " +
                 std::to_string(out.end_size) + ")",
             out.c1 == out.c3, json{{"cp", out.c1}, {"tchain", out.c3}});
    } else {
      r.skip(name + ": End CP cross-check", "lattice above the |M| <= 6 bound");
    }
  }
}

// ---------------------------------------------------------------- thm-5.10

void suite_thm_5_10(Runner& r) {
  auto b = boolean_semifield();
  auto b2 = boolean_algebra(2);
  // M = B^2 over B
  {
    auto lattice = lattice_from_module(
        *direct_sum_modules({regular_semimodule(b), regular_semimodule(b)}));
    auto m = as_semimodule(lattice);
    auto dec = boolean_base_decomposition(m);
    bool shape = dec.components.size() == 1 &&
                 dec.components[0].lattice.size == 4 &&
                 dec.base_quotient->size == 2;
    r.item("square over B decomposes into one square component", shape);
    bool cross =
        cp(module_endomorphism_semiring(m, r.cfg.size_cap).ring, r.cfg) ==
        tchain_interval_condition(dec.components[0].lattice);
    r.item("square over B: End CP matches the component condition", cross);
  }
  // M = B x 3-chain over B^2, componentwise action
  {
    FiniteSemimodule m;
    m.ring = b2;
    m.size = 6;  // pairs (x, y), x in B, y in C3, index = x*3 + y
    m.add_table.resize(36);
    m.action_table.resize(6 * 4);
    for (Elem x1 = 0; x1 < 2; ++x1)
      for (Elem y1 = 0; y1 < 3; ++y1)
        for (Elem x2 = 0; x2 < 2; ++x2)
          for (Elem y2 = 0; y2 < 3; ++y2)
            m.add_table[(x1 * 3 + y1) * 6 + (x2 * 3 + y2)] =
                std::max(x1, x2) * 3 + std::max(y1, y2);
    for (Elem x = 0; x < 2; ++x)
      for (Elem y = 0; y < 3; ++y)
        for (Elem s = 0; s < 4; ++s) {
          Elem sx = s >> 1 & 1, sy = s & 1;  // base B^2 carrier is bitmask
          m.action_table[(x * 3 + y) * 4 + s] = (x & sx) * 3 + (sy ? y : 0);
        }
    m.zero = 0;
    auto mp = finish_semimodule(std::move(m));
    auto dec = boolean_base_decomposition(mp);
    bool shape = dec.components.size() == 2;
    if (shape) {
      std::multiset<int> sizes{dec.components[0].lattice.size,
                               dec.components[1].lattice.size};
      shape = sizes == std::multiset<int>{2, 3};
    }
    r.item("B x 3-chain over the four-element Boolean algebra splits into "
           "components of sizes 2 and 3",
           shape);
    bool all3 = true;
    for (const auto& compo : dec.components)
      all3 = all3 && tchain_interval_condition(compo.lattice);
    bool cross =
        cp(module_endomorphism_semiring(mp, r.cfg.size_cap).ring, r.cfg) == all3;
    r.item("B x 3-chain: End CP matches the component conditions", cross);
  }
  // annihilated coordinate is excluded
  {
    FiniteSemimodule m;
    m.ring = b2;
    m.size = 2;
    m.add_table = {0, 1, 1, 1};
    m.action_table.resize(2 * 4);
    for (Elem x = 0; x < 2; ++x)
      for (Elem s = 0; s < 4; ++s)
        m.action_table[x * 4 + s] = x & (s >> 1 & 1);
    m.zero = 0;
    auto mp = finish_semimodule(std::move(m));
    auto dec = boolean_base_decomposition(mp);
    r.item("annihilated atom is excluded from the decomposition",
           dec.components.size() == 1 && dec.base_quotient->size == 2 &&
               dec.annihilator.size() == 2);
  }
  // a failing component: the 2x3 grid over B
  {
    auto grid = lattice_from_module(*direct_sum_modules(
        {as_semimodule(chain_lattice(2)), as_semimodule(chain_lattice(3))}));
    auto m = as_semimodule(grid);
    auto dec = boolean_base_decomposition(m);
    bool comp_fails = dec.components.size() == 1 &&
                      !tchain_interval_condition(dec.components[0].lattice);
    bool cross =
        !cp(module_endomorphism_semiring(m, r.cfg.size_cap).ring, r.cfg);
    r.item("2x3 grid over B: failing component condition matches non-CP End",
           comp_fails && cross);
  }
}

// ------------------------------------------------------- thm-5.11/cor-5.12

void suite_thm_5_11(Runner& r) {
  // End(M) side of the classification, on the small distributive family.
  for (const auto& lattice : enumerate_distributive_lattices(3, r.cfg.size_cap)) {
    if (!tchain_interval_condition(lattice)) continue;
    EndomorphismSemiring endo;
    try {
      endo = endomorphism_semiring(lattice, 256);
    } catch (const SizeCapExceeded&) {
      r.skip("simpleness of End(" + lattice.name + ")",
             "endomorphism semiring above 256 elements");
      continue;
    }
    bool ok = is_ideal_simple(endo.ring) &&
              is_congruence_simple(endo.ring, r.cfg.congruence_cap) &&
              cp(endo.ring, r.cfg);
    r.item("End(" + lattice.name + "[" + std::to_string(lattice.size) +
               "]) is simple and CP (|End| = " +
               std::to_string(endo.ring->size) + ")",
           ok);
  }
  // Matrix rings over finite fields are the other branch.
  for (const char* id : {"Z2", "Z3", "Mat Z2 2"}) {
    auto s = construct(std::string(id), r.cfg.size_cap);
    r.item(std::string(id) + " is an ideal-simple and congruence-simple CP ring",
           is_ideal_simple(s) && is_congruence_simple(s, r.cfg.congruence_cap) &&
               cp(s, r.cfg));
  }
  auto m2b = matrix_semiring(boolean_semifield(), 2, r.cfg.size_cap);
  auto endb2 = endomorphism_semiring(
      lattice_from_module(*direct_sum_modules(
          {regular_semimodule(boolean_semifield()),
           regular_semimodule(boolean_semifield())})),
      r.cfg.size_cap);
  r.item("M2(B) is End of the four-element square", iso(*m2b, *endb2.ring));
}

void suite_cor_5_12(Runner& r) {
  for (auto& [name, s] : universe(r.cfg)) {
    bool a = is_ideal_simple(s) && cp(s, r.cfg);
    bool b = is_congruence_simple(s, r.cfg.congruence_cap) && cp(s, r.cfg);
    r.item(name + ": ideal-simple CP iff congruence-simple CP", a == b,
           json{{"ideal_cp", a}, {"congruence_cp", b}});
  }
}

// ----------------------------------------------------------------- conj-6.1

void suite_conj_6_1(Runner& r) {
  long scanned = 0;
  json counterexamples = json::array();
  auto consider = [&](const std::string& name, const SemiringPtr& s) {
    if (!classify(s).zerosumfree.value || !cp(s, r.cfg)) return;
    ++scanned;
    if (!infinite_element(*s)) counterexamples.push_back(name);
  };
  for (auto& [name, s] : suite_catalog(r.cfg)) consider(name, s);
  int order = std::min(r.cfg.conjecture_scan_order, r.cfg.max_semiring_order);
  for (int n = 1; n <= order; ++n) {
    auto all = enumerate_semirings(n, r.cfg.max_semiring_order);
    for (size_t i = 0; i < all.size(); ++i)
      consider("order" + std::to_string(n) + "#" + std::to_string(i), all[i]);
  }
  r.item("every zerosumfree CP semiring scanned has an infinite element (" +
             std::to_string(scanned) + " scanned, orders up to " +
             std::to_string(order) + ")",
         counterexamples.empty(),
         json{{"scanned", scanned}, {"counterexamples", counterexamples}});
}

}  // namespace

std::vector<std::string> suite_ids() {
  return {"thm-3.1",  "prop-3.5",  "cor-3.6",  "prop-3.10", "thm-3.11",
          "thm-4.1",  "prop-4.2",  "prop-4.3", "thm-4.4",   "thm-4.9",
          "thm-4.10", "cor-4.11",  "facts-4.12", "prop-4.13", "thm-4.16",
          "thm-4.17", "prop-5.1",  "facts-5.4-5.5", "prop-5.7", "prop-5.8",
          "thm-5.9",  "thm-5.10",  "thm-5.11", "cor-5.12",  "conj-6.1"};
}

SuiteReport run_suite(const std::string& id, const Config& cfg) {
  Runner r(id, cfg);
  auto start = std::chrono::steady_clock::now();
  if (id == "thm-3.1")
    suite_thm_3_1(r);
  else if (id == "prop-3.5")
    suite_prop_3_5(r);
  else if (id == "cor-3.6")
    suite_cor_3_6(r);
  else if (id == "prop-3.10")
    suite_prop_3_10(r);
  else if (id == "thm-3.11")
    suite_thm_3_11(r);
  else if (id == "thm-4.1")
    suite_thm_4_1(r);
  else if (id == "prop-4.2")
    suite_prop_4_2(r);
  else if (id == "prop-4.3")
    suite_prop_4_3(r);
  else if (id == "thm-4.4")
    suite_thm_4_4(r);
  else if (id == "thm-4.9")
    suite_thm_4_9(r);
  else if (id == "thm-4.10")
    suite_thm_4_10(r);
  else if (id == "cor-4.11")
    suite_cor_4_11(r);
  else if (id == "facts-4.12")
    suite_facts_4_12(r);
  else if (id == "prop-4.13")
    suite_prop_4_13(r);
  else if (id == "thm-4.16")
    suite_thm_4_16(r);
  else if (id == "thm-4.17")
    suite_thm_4_17(r);
  else if (id == "prop-5.1")
    suite_prop_5_1(r);
  else if (id == "facts-5.4-5.5")
    suite_facts_5_4_5_5(r);
  else if (id == "prop-5.7")
    suite_prop_5_7(r);
  else if (id == "prop-5.8")
    suite_prop_5_8(r);
  else if (id == "thm-5.9")
    suite_thm_5_9(r);
  else if (id == "thm-5.10")
    suite_thm_5_10(r);
  else if (id == "thm-5.11")
    suite_thm_5_11(r);
  else if (id == "cor-5.12")
    suite_cor_5_12(r);
  else if (id == "conj-6.1")
    suite_conj_6_1(r);
  else
    throw BadParams("unknown suite id: " + id);
  r.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r.report;
}

}  // namespace semiring_lab
