#include "semiring_lab/semimodule.hpp"

#include <algorithm>
#include <set>

namespace semiring_lab {

bool same_module(const FiniteSemimodule& a, const FiniteSemimodule& b) {
  return a.size == b.size && a.zero == b.zero && a.add_table == b.add_table &&
         a.action_table == b.action_table && same_semiring(*a.ring, *b.ring);
}

namespace {

void check_shape(const FiniteSemimodule& m) {
  if (!m.ring) throw ShapeError("semimodule has no ground semiring");
  if (m.size <= 0) throw ShapeError("carrier size must be positive");
  const auto n = static_cast<size_t>(m.size);
  const auto k = static_cast<size_t>(m.ring->size);
  if (m.add_table.size() != n * n) throw ShapeError("add table is not size*size");
  if (m.action_table.size() != n * k)
    throw ShapeError("action table is not size*|S|");
  for (Elem v : m.add_table)
    if (v < 0 || v >= m.size) throw ShapeError("add entry out of range");
  for (Elem v : m.action_table)
    if (v < 0 || v >= m.size) throw ShapeError("action entry out of range");
  if (m.zero < 0 || m.zero >= m.size) throw ShapeError("zero out of range");
  if (!m.labels.empty() && m.labels.size() != n)
    throw ShapeError("labels length differs from carrier size");
}

}  // namespace

void check_semimodule_axioms(const FiniteSemimodule& m) {
  check_shape(m);
  const int n = m.size;
  const FiniteSemiring& s = *m.ring;
  for (Elem a = 0; a < n; ++a) {
    if (m.add(m.zero, a) != a || m.add(a, m.zero) != a)
      throw AxiomViolation("additive identity", {a});
    if (m.act(a, s.one) != a) throw AxiomViolation("unit action", {a});
    if (m.act(a, s.zero) != m.zero)
      throw AxiomViolation("action of ring zero", {a});
    for (Elem b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a))
        throw AxiomViolation("addition commutativity", {a, b});
      for (Elem c = 0; c < n; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          throw AxiomViolation("addition associativity", {a, b, c});
    }
  }
  for (Elem r = 0; r < s.size; ++r) {
    if (m.act(m.zero, r) != m.zero)
      throw AxiomViolation("zero is fixed by the action", {r});
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b)
        if (m.act(m.add(a, b), r) != m.add(m.act(a, r), m.act(b, r)))
          throw AxiomViolation("action distributes over module addition",
                               {a, b, r});
      for (Elem r2 = 0; r2 < s.size; ++r2) {
        if (m.act(a, s.mul(r, r2)) != m.act(m.act(a, r), r2))
          throw AxiomViolation("action associativity", {a, r, r2});
        if (m.act(a, s.add(r, r2)) != m.add(m.act(a, r), m.act(a, r2)))
          throw AxiomViolation("action distributes over scalar addition",
                               {a, r, r2});
      }
    }
  }
}

namespace {

ModulePtr seal(FiniteSemimodule&& m) {
  if (m.labels.empty()) {
    m.labels.resize(m.size);
    for (Elem a = 0; a < m.size; ++a) m.labels[a] = std::to_string(a);
  }
  return std::make_shared<const FiniteSemimodule>(std::move(m));
}

}  // namespace

ModulePtr validate_semimodule(SemiringPtr ring, int size,
                              std::vector<Elem> add, Elem zero,
                              std::vector<Elem> action,
                              std::vector<std::string> labels,
                              std::string name) {
  FiniteSemimodule m;
  m.ring = std::move(ring);
  m.size = size;
  m.add_table = std::move(add);
  m.zero = zero;
  m.action_table = std::move(action);
  m.labels = std::move(labels);
  m.name = std::move(name);
  check_semimodule_axioms(m);
  return seal(std::move(m));
}

ModulePtr finish_semimodule(FiniteSemimodule m) {
  if (m.size <= kRecheckLimit && m.ring && m.ring->size <= kRecheckLimit) {
    check_semimodule_axioms(m);
  } else {
    check_shape(m);
  }
  return seal(std::move(m));
}

ModulePtr regular_semimodule(const SemiringPtr& s) {
  FiniteSemimodule m;
  m.ring = s;
  m.size = s->size;
  m.add_table = s->add_table;
  m.zero = s->zero;
  m.action_table = s->mul_table;
  m.labels = s->labels;
  m.name = s->name.empty() ? "regular" : s->name + " (regular)";
  return seal(std::move(m));
}

SemimoduleHom validate_hom(ModulePtr source, ModulePtr target,
                           std::vector<Elem> map) {
  if (!source || !target) throw ShapeError("hom endpoints missing");
  if (!same_semiring(*source->ring, *target->ring))
    throw KindMismatch("hom endpoints live over different semirings");
  if (map.size() != static_cast<size_t>(source->size))
    throw ShapeError("hom map length differs from source size");
  for (Elem v : map)
    if (v < 0 || v >= target->size) throw ShapeError("hom entry out of range");
  if (map[source->zero] != target->zero)
    throw AxiomViolation("hom preserves zero", {});
  for (Elem a = 0; a < source->size; ++a) {
    for (Elem b = 0; b < source->size; ++b)
      if (map[source->add(a, b)] != target->add(map[a], map[b]))
        throw AxiomViolation("hom preserves addition", {a, b});
    for (Elem r = 0; r < source->ring->size; ++r)
      if (map[source->act(a, r)] != target->act(map[a], r))
        throw AxiomViolation("hom preserves the action", {a, r});
  }
  SemimoduleHom h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.map = std::move(map);
  return h;
}

bool is_surjective(const SemimoduleHom& h) {
  std::vector<bool> hit(h.target->size, false);
  for (Elem v : h.map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_injective(const SemimoduleHom& h) {
  std::vector<bool> hit(h.target->size, false);
  for (Elem v : h.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<bool> subsemimodule_closure(const FiniteSemimodule& m,
                                        std::vector<bool> seed) {
  seed[m.zero] = true;
  std::vector<Elem> members;
  for (Elem a = 0; a < m.size; ++a)
    if (seed[a]) members.push_back(a);
  auto absorb = [&](Elem x) {
    if (!seed[x]) {
      seed[x] = true;
      members.push_back(x);
    }
  };
  // Element i pairs with every j <= i; later arrivals pick up the pairs with
  // earlier members when their own turn comes.
  for (size_t i = 0; i < members.size(); ++i) {
    Elem a = members[i];
    for (size_t j = 0; j <= i; ++j) absorb(m.add(a, members[j]));
    for (Elem r = 0; r < m.ring->size; ++r) absorb(m.act(a, r));
  }
  return seed;
}

bool is_subsemimodule(const FiniteSemimodule& m, const std::vector<bool>& set,
                      std::vector<int>* witness) {
  if (set.size() != static_cast<size_t>(m.size))
    throw ShapeError("subset mask has wrong length");
  auto fail = [&](std::initializer_list<int> w) {
    if (witness) witness->assign(w);
    return false;
  };
  if (!set[m.zero]) return fail({m.zero});
  for (Elem a = 0; a < m.size; ++a) {
    if (!set[a]) continue;
    for (Elem b = a; b < m.size; ++b)
      if (set[b] && !set[m.add(a, b)]) return fail({a, b});
    for (Elem r = 0; r < m.ring->size; ++r)
      if (!set[m.act(a, r)]) return fail({a, r});
  }
  return true;
}

std::vector<bool> principal_subsemimodule(const FiniteSemimodule& m, Elem a) {
  std::vector<bool> seed(m.size, false);
  seed[a] = true;
  return subsemimodule_closure(m, std::move(seed));
}

namespace {

bool mask_order(const std::vector<bool>& a, const std::vector<bool>& b) {
  int ca = static_cast<int>(std::count(a.begin(), a.end(), true));
  int cb = static_cast<int>(std::count(b.begin(), b.end(), true));
  if (ca != cb) return ca < cb;
  return a < b;
}

}  // namespace

std::vector<std::vector<bool>> subsemimodules(const FiniteSemimodule& m) {
  std::vector<std::vector<bool>> out;
  if (m.size <= 20) {
    const unsigned long total = 1ul << m.size;
    for (unsigned long bits = 0; bits < total; ++bits) {
      if (!(bits >> m.zero & 1ul)) continue;
      std::vector<bool> set(m.size);
      for (Elem a = 0; a < m.size; ++a) set[a] = (bits >> a) & 1ul;
      if (is_subsemimodule(m, set)) out.push_back(std::move(set));
    }
  } else {
    std::set<std::vector<bool>> seen;
    std::vector<std::vector<bool>> queue;
    std::vector<bool> zero_only(m.size, false);
    zero_only[m.zero] = true;
    queue.push_back(zero_only);
    seen.insert(zero_only);
    for (Elem a = 0; a < m.size; ++a) {
      auto p = principal_subsemimodule(m, a);
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
    for (size_t i = 0; i < queue.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        std::vector<bool> join(m.size, false);
        for (Elem a = 0; a < m.size; ++a)
          join[a] = queue[i][a] || queue[j][a];
        join = subsemimodule_closure(m, std::move(join));
        if (seen.insert(join).second) queue.push_back(std::move(join));
      }
    out = std::move(queue);
  }
  std::sort(out.begin(), out.end(), mask_order);
  return out;
}

ModulePtr submodule(const FiniteSemimodule& m, const std::vector<bool>& set,
                    std::string name) {
  std::vector<int> witness;
  if (!is_subsemimodule(m, set, &witness))
    throw NotASubsemimodule("subset is not a subsemimodule", witness);
  std::vector<Elem> elems;
  std::vector<Elem> index_of(m.size, -1);
  for (Elem a = 0; a < m.size; ++a)
    if (set[a]) {
      index_of[a] = static_cast<Elem>(elems.size());
      elems.push_back(a);
    }
  FiniteSemimodule r;
  r.ring = m.ring;
  r.size = static_cast<int>(elems.size());
  r.zero = index_of[m.zero];
  r.add_table.resize(static_cast<size_t>(r.size) * r.size);
  r.action_table.resize(static_cast<size_t>(r.size) * m.ring->size);
  r.labels.resize(r.size);
  for (int i = 0; i < r.size; ++i) {
    r.labels[i] = m.label(elems[i]);
    for (int j = 0; j < r.size; ++j)
      r.add_table[i * r.size + j] = index_of[m.add(elems[i], elems[j])];
    for (Elem s = 0; s < m.ring->size; ++s)
      r.action_table[i * m.ring->size + s] = index_of[m.act(elems[i], s)];
  }
  r.name = std::move(name);
  return finish_semimodule(std::move(r));
}

std::vector<Elem> direct_sum_decode(const std::vector<ModulePtr>& parts,
                                    Elem idx) {
  std::vector<Elem> tuple(parts.size());
  for (size_t i = parts.size(); i-- > 0;) {
    tuple[i] = idx % parts[i]->size;
    idx /= parts[i]->size;
  }
  return tuple;
}

Elem direct_sum_encode(const std::vector<ModulePtr>& parts,
                       const std::vector<Elem>& tuple) {
  Elem idx = 0;
  for (size_t i = 0; i < parts.size(); ++i)
    idx = idx * parts[i]->size + tuple[i];
  return idx;
}

ModulePtr direct_sum_modules(const std::vector<ModulePtr>& parts,
                             int size_cap) {
  if (parts.empty()) throw BadParams("direct sum of zero semimodules");
  const SemiringPtr& ring = parts.front()->ring;
  long total = 1;
  for (const auto& p : parts) {
    if (!same_semiring(*p->ring, *ring))
      throw KindMismatch("direct sum requires a common ground semiring");
    total *= p->size;
    if (total > size_cap)
      throw SizeCapExceeded("direct sum carrier exceeds size cap");
  }
  FiniteSemimodule m;
  m.ring = ring;
  m.size = static_cast<int>(total);
  m.add_table.resize(static_cast<size_t>(m.size) * m.size);
  m.action_table.resize(static_cast<size_t>(m.size) * ring->size);
  m.labels.resize(m.size);
  std::vector<std::vector<Elem>> tuples(m.size);
  for (Elem x = 0; x < m.size; ++x) tuples[x] = direct_sum_decode(parts, x);
  std::vector<Elem> zero_tuple(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) zero_tuple[i] = parts[i]->zero;
  m.zero = direct_sum_encode(parts, zero_tuple);
  std::vector<Elem> scratch(parts.size());
  for (Elem x = 0; x < m.size; ++x) {
    std::string label = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) label += ",";
      label += parts[i]->label(tuples[x][i]);
    }
    m.labels[x] = label + ")";
    for (Elem y = 0; y < m.size; ++y) {
      for (size_t i = 0; i < parts.size(); ++i)
        scratch[i] = parts[i]->add(tuples[x][i], tuples[y][i]);
      m.add_table[x * m.size + y] = direct_sum_encode(parts, scratch);
    }
    for (Elem s = 0; s < ring->size; ++s) {
      for (size_t i = 0; i < parts.size(); ++i)
        scratch[i] = parts[i]->act(tuples[x][i], s);
      m.action_table[x * ring->size + s] = direct_sum_encode(parts, scratch);
    }
  }
  return finish_semimodule(std::move(m));
}

}  // namespace semiring_lab
