#include "semiring_lab/projectivity.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/iso.hpp"

namespace semiring_lab {

using nlohmann::json;

std::vector<CyclicQuotient> cyclic_quotients(const SemiringPtr& s, long cap) {
  auto reg = regular_semimodule(s);
  auto set = all_congruences(*reg, cap);
  if (!set.complete) throw CongruenceLimitExceeded(cap);
  std::vector<CyclicQuotient> out;
  out.reserve(set.congruences.size());
  for (auto& c : set.congruences) {
    auto q = quotient_semimodule(reg, c);
    out.push_back({s, std::move(c), q.quotient, std::move(q.projection)});
  }
  return out;
}

std::optional<Elem> splitting_idempotent(const FiniteSemiring& s,
                                         const Congruence& theta) {
  if (theta.size() != s.size)
    throw ShapeError("congruence does not match the semiring");
  for (Elem e = 0; e < s.size; ++e) {
    bool ok = true;
    for (Elem x = 0; x < s.size && ok; ++x) {
      Elem rep = theta.block_of[x];
      if (rep != x && s.mul(e, x) != s.mul(e, rep)) ok = false;  // well-defined
      if (ok && !theta.related(s.mul(e, x), x)) ok = false;      // section
    }
    if (ok) {
      if (s.mul(e, e) != e || !theta.related(s.one, e))
        throw std::logic_error("splitting element is not a related idempotent");
      return e;
    }
  }
  return std::nullopt;
}

namespace {

CpVerdict run_cp(const SemiringPtr& s, bool exhaustive, long cap) {
  CpVerdict v;
  v.is_cp = true;
  enumerate_congruences(
      module_view_of_semiring(*s), cap, [&](const Congruence& c) {
        auto e = splitting_idempotent(*s, c);
        if (e) {
          v.splittings.push_back({c, *e});
          return true;
        }
        v.is_cp = false;
        if (!v.witness) v.witness = c;
        return exhaustive;
      });
  std::sort(v.splittings.begin(), v.splittings.end(),
            [](const Splitting& a, const Splitting& b) {
              int na = a.congruence.num_blocks(), nb = b.congruence.num_blocks();
              if (na != nb) return na > nb;
              return a.congruence.block_of < b.congruence.block_of;
            });
  return v;
}

json blocks_json(const Congruence& c) {
  json out = json::array();
  for (const auto& block : c.blocks()) out.push_back(block);
  return out;
}

}  // namespace

CpVerdict is_cp(const SemiringPtr& s, bool exhaustive, long cap) {
  return run_cp(s, exhaustive, cap);
}

CpVerdict is_cp_left(const SemiringPtr& s, bool exhaustive, long cap) {
  return run_cp(opposite(s), exhaustive, cap);
}

json CpVerdict::to_json() const {
  json out;
  out["is_cp"] = is_cp;
  out["witness_blocks"] = witness ? blocks_json(*witness) : json();
  json sp = json::array();
  for (const auto& s : splittings)
    sp.push_back(json{{"blocks", blocks_json(s.congruence)}, {"e", s.idempotent}});
  out["splittings"] = sp;
  return out;
}

MatrixCpWitness matrix_cp_counterexample(const SemiringPtr& s, int n,
                                         long element_cap) {
  if (n < 3)
    throw PreconditionFailed("the matrix certificate needs dimension >= 3");
  for (Elem a = 0; a < s->size; ++a)
    if (s->add(a, a) != a)
      throw PreconditionFailed("base semiring must be additively idempotent");
  if (is_ring(*s))
    throw PreconditionFailed("base semiring must not be a ring");
  long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= s->size;
    if (total > element_cap)
      throw SizeCapExceeded("matrix carrier exceeds the element cap");
  }
  const long size = total;
  const int nn = n * n;
  // Decode every matrix once; operations run on the decoded entries.
  std::vector<Elem> entries(static_cast<size_t>(size) * nn);
  for (long x = 0; x < size; ++x) {
    auto m = matrix_decode(*s, n, static_cast<Elem>(x));
    std::copy(m.begin(), m.end(), entries.begin() + x * nn);
  }
  std::vector<Elem> id(nn, s->zero), hollow(nn, s->one);
  for (int i = 0; i < n; ++i) {
    id[i * n + i] = s->one;
    hollow[i * n + i] = s->zero;
  }
  const Elem one = matrix_encode(*s, n, id);
  std::vector<Elem> buf(nn);
  auto matmul = [&](const Elem* a, const Elem* b) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Elem acc = s->zero;
        for (int k = 0; k < n; ++k)
          acc = s->add(acc, s->mul(a[i * n + k], b[k * n + j]));
        buf[i * n + j] = acc;
      }
    return matrix_encode(*s, n, buf);
  };
  // Kernel congruence of X -> AX.
  std::vector<Elem> ax(size);
  for (long x = 0; x < size; ++x)
    ax[x] = matmul(hollow.data(), entries.data() + x * nn);
  MatrixCpWitness out;
  out.matrix_size = size;
  out.kernel.kind = CongruenceKind::Semimodule;
  out.kernel.block_of.resize(size);
  {
    std::unordered_map<Elem, Elem> first_seen;
    for (long x = 0; x < size; ++x) {
      auto [it, fresh] = first_seen.try_emplace(ax[x], static_cast<Elem>(x));
      out.kernel.block_of[x] = it->second;
      (void)fresh;
    }
  }
  // A splitting element must be an idempotent in the class of the identity
  // (section at 1), which prunes the scan to a handful of candidates.
  std::vector<Elem> ex(size);
  for (long e = 0; e < size; ++e) {
    if (ax[e] != ax[one]) continue;
    const Elem* em = entries.data() + e * nn;
    if (matmul(em, em) != static_cast<Elem>(e)) continue;
    bool ok = true;
    for (long x = 0; x < size && ok; ++x) {
      ex[x] = matmul(em, entries.data() + x * nn);
      Elem rep = out.kernel.block_of[x];
      if (rep != static_cast<Elem>(x) && ex[x] != ex[rep]) ok = false;
      if (ok && out.kernel.block_of[ex[x]] != rep) ok = false;
    }
    if (ok) {
      out.splitting = static_cast<Elem>(e);
      return out;
    }
  }
  out.splitting = std::nullopt;
  return out;
}

CDiagram full_c_diagram(const ModulePtr& m) {
  CDiagram out;
  out.parent = m;
  const int size = m->size;
  const int scalars = m->ring->size;
  std::vector<std::vector<Elem>> index_in_node(size);
  for (Elem g = 0; g < size; ++g) {
    std::vector<bool> mask(size, false);
    for (Elem s = 0; s < scalars; ++s) mask[m->act(g, s)] = true;
    std::vector<Elem> elems;
    std::vector<Elem> idx(size, -1);
    for (Elem x = 0; x < size; ++x)
      if (mask[x]) {
        idx[x] = static_cast<Elem>(elems.size());
        elems.push_back(x);
      }
    out.diagram.nodes.push_back(
        submodule(*m, mask, "cyclic(" + m->label(g) + ")"));
    out.node_elements.push_back(std::move(elems));
    index_in_node[g] = std::move(idx);
  }
  std::set<std::pair<int, int>> seen;
  for (Elem g = 0; g < size; ++g)
    for (Elem s = 0; s < scalars; ++s) {
      Elem h = m->act(g, s);  // edge from node h to node g (hS inside gS)
      if (!seen.insert({h, g}).second) continue;
      Diagram::Edge e;
      e.source = h;
      e.target = g;
      e.map.reserve(out.node_elements[h].size());
      for (Elem x : out.node_elements[h]) {
        Elem t = index_in_node[g][x];
        if (t < 0)
          throw std::logic_error("cyclic subsemimodule inclusion failed");
        e.map.push_back(t);
      }
      out.diagram.edges.push_back(std::move(e));
    }
  return out;
}

ColimitResult colimit(const Diagram& d, int size_cap) {
  if (d.nodes.empty()) throw BadParams("colimit of an empty diagram");
  ColimitResult out;
  out.sum = direct_sum_modules(d.nodes, size_cap);
  const size_t k = d.nodes.size();
  auto inject = [&](size_t node, Elem x) {
    std::vector<Elem> tuple(k);
    for (size_t i = 0; i < k; ++i) tuple[i] = d.nodes[i]->zero;
    tuple[node] = x;
    return direct_sum_encode(d.nodes, tuple);
  };
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& e : d.edges)
    for (Elem x = 0; x < d.nodes[e.source]->size; ++x)
      pairs.emplace_back(inject(e.target, e.map[x]), inject(e.source, x));
  out.gluing = generated_congruence(module_view(*out.sum), pairs);
  auto q = quotient_semimodule(out.sum, out.gluing);
  out.colimit = q.quotient;
  for (size_t i = 0; i < k; ++i) {
    std::vector<Elem> map(d.nodes[i]->size);
    for (Elem x = 0; x < d.nodes[i]->size; ++x)
      map[x] = q.projection.map[inject(i, x)];
    out.cocone.push_back(validate_hom(d.nodes[i], out.colimit, std::move(map)));
  }
  return out;
}

std::optional<SemimoduleHom> mediating_hom(
    const Diagram& d, const ColimitResult& c,
    const std::vector<SemimoduleHom>& candidate) {
  if (candidate.size() != d.nodes.size())
    throw ShapeError("candidate cocone has the wrong arity");
  const ModulePtr& q = candidate.front().target;
  for (const auto& h : candidate)
    if (h.target != q && !same_module(*h.target, *q))
      throw ShapeError("candidate cocone legs have different targets");
  // Value of the would-be mediating hom on each element of the sum.
  std::vector<Elem> value(c.sum->size);
  for (Elem t = 0; t < c.sum->size; ++t) {
    auto tuple = direct_sum_decode(d.nodes, t);
    Elem acc = q->zero;
    for (size_t i = 0; i < d.nodes.size(); ++i)
      acc = q->add(acc, candidate[i].map[tuple[i]]);
    value[t] = acc;
  }
  for (Elem t = 0; t < c.sum->size; ++t)
    if (value[t] != value[c.gluing.block_of[t]]) return std::nullopt;
  std::vector<Elem> map(c.colimit->size);
  for (Elem t = 0; t < c.sum->size; ++t)
    if (c.gluing.block_of[t] == t) {
      // block representative t corresponds to a colimit element
      Elem idx = 0;
      for (Elem u = 0; u < t; ++u)
        if (c.gluing.block_of[u] == u) ++idx;
      map[idx] = value[t];
    }
  try {
    return validate_hom(c.colimit, q, std::move(map));
  } catch (const AxiomViolation&) {
    return std::nullopt;
  }
}

std::vector<Elem> greedy_generating_set(const FiniteSemimodule& m) {
  std::vector<bool> generated(m.size, false);
  generated[m.zero] = true;
  std::vector<Elem> gens;
  auto count = [](const std::vector<bool>& v) {
    return std::count(v.begin(), v.end(), true);
  };
  while (count(generated) < m.size) {
    Elem best = -1;
    long best_size = -1;
    for (Elem x = 0; x < m.size; ++x) {
      if (generated[x]) continue;
      auto trial = generated;
      trial[x] = true;
      long sz = count(subsemimodule_closure(m, std::move(trial)));
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    generated[best] = true;
    generated = subsemimodule_closure(m, std::move(generated));
  }
  return gens;
}

bool is_projective(const ModulePtr& m, std::optional<std::vector<Elem>> generators,
                   long budget) {
  std::vector<Elem> gens =
      generators ? std::move(*generators) : greedy_generating_set(*m);
  if (gens.empty()) return true;  // the zero semimodule is free of rank 0
  const SemiringPtr& ring = m->ring;
  const size_t g = gens.size();
  long fsize = 1;
  for (size_t i = 0; i < g; ++i) {
    fsize *= ring->size;
    if (fsize > 65536)
      throw SearchBudgetExceeded("free cover carrier too large");
  }
  auto reg = regular_semimodule(ring);
  std::vector<ModulePtr> copies(g, reg);
  auto free_mod = direct_sum_modules(copies, static_cast<int>(fsize));
  // canonical surjection
  std::vector<Elem> pi(free_mod->size);
  for (Elem t = 0; t < free_mod->size; ++t) {
    auto tuple = direct_sum_decode(copies, t);
    Elem acc = m->zero;
    for (size_t i = 0; i < g; ++i)
      acc = m->add(acc, m->act(gens[i], tuple[i]));
    pi[t] = acc;
  }
  {
    std::vector<bool> hit(m->size, false);
    for (Elem v : pi) hit[v] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw std::logic_error("generating set does not generate");
  }
  // candidate section values: the fiber over each generator
  std::vector<std::vector<Elem>> fibers(g);
  long combos = 1;
  for (size_t i = 0; i < g; ++i) {
    for (Elem t = 0; t < free_mod->size; ++t)
      if (pi[t] == gens[i]) fibers[i].push_back(t);
    combos *= static_cast<long>(fibers[i].size());
    if (combos > budget)
      throw SearchBudgetExceeded("section search exceeds the budget");
  }
  std::vector<Elem> choice(g);
  // graph closure of the assignment; fails on a functional conflict
  auto splits = [&](const std::vector<Elem>& images) {
    std::vector<Elem> func(m->size, -1);
    std::vector<std::pair<Elem, Elem>> pairsv;
    auto push = [&](Elem a, Elem v) {
      if (func[a] == v) return true;
      if (func[a] >= 0) return false;
      func[a] = v;
      pairsv.emplace_back(a, v);
      return true;
    };
    if (!push(m->zero, free_mod->zero)) return false;
    for (size_t i = 0; i < g; ++i)
      if (!push(gens[i], images[i])) return false;
    for (size_t i = 0; i < pairsv.size(); ++i) {
      auto [a, v] = pairsv[i];
      for (size_t j = 0; j <= i; ++j) {
        auto [b, w] = pairsv[j];
        if (!push(m->add(a, b), free_mod->add(v, w))) return false;
      }
      for (Elem s = 0; s < ring->size; ++s)
        if (!push(m->act(a, s), free_mod->act(v, s))) return false;
    }
    for (Elem a = 0; a < m->size; ++a)
      if (func[a] < 0 || pi[func[a]] != a) return false;
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == g) return splits(choice);
    for (Elem v : fibers[i]) {
      choice[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

SemiringPtr corner_or_trivial(const SemiringPtr& s, Elem e) {
  if (e == s->zero) return zn(1);
  return corner_semiring(s, e);
}

std::vector<std::pair<Elem, Elem>> peirce_decompositions(const SemiringPtr& s) {
  std::vector<Elem> central;
  for (Elem e = 0; e < s->size; ++e) {
    if (s->mul(e, e) != e) continue;
    bool ok = true;
    for (Elem x = 0; x < s->size && ok; ++x) ok = s->mul(e, x) == s->mul(x, e);
    if (ok) central.push_back(e);
  }
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem e : central)
    for (Elem f : central)
      if (s->add(e, f) == s->one && s->mul(e, f) == s->zero &&
          s->mul(f, e) == s->zero) {
        auto sum = direct_sum(corner_or_trivial(s, e), corner_or_trivial(s, f));
        if (!are_isomorphic(*sum, *s))
          throw std::logic_error("orthogonal central pair does not split S");
        out.emplace_back(e, f);
      }
  return out;
}

std::optional<Elem> infinite_element(const FiniteSemiring& s) {
  for (Elem w = 0; w < s.size; ++w) {
    bool ok = true;
    for (Elem x = 0; x < s.size && ok; ++x) ok = s.add(x, w) == w;
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace semiring_lab
