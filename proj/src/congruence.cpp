#include "semiring_lab/congruence.hpp"

#include "semiring_lab/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace semiring_lab {

int Congruence::num_blocks() const {
  int n = 0;
  for (Elem a = 0; a < size(); ++a)
    if (block_of[a] == a) ++n;
  return n;
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> out;
  std::vector<int> slot(block_of.size(), -1);
  for (Elem a = 0; a < size(); ++a) {
    Elem rep = block_of[a];
    if (slot[rep] < 0) {
      slot[rep] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[rep]].push_back(a);
  }
  return out;
}

bool Congruence::is_diagonal() const {
  for (Elem a = 0; a < size(); ++a)
    if (block_of[a] != a) return false;
  return true;
}

bool Congruence::is_universal() const {
  for (Elem a = 0; a < size(); ++a)
    if (block_of[a] != 0) return false;
  return true;
}

Congruence diagonal_congruence(int size, CongruenceKind kind) {
  Congruence c;
  c.kind = kind;
  c.block_of.resize(size);
  std::iota(c.block_of.begin(), c.block_of.end(), 0);
  return c;
}

Congruence universal_congruence(int size, CongruenceKind kind) {
  Congruence c;
  c.kind = kind;
  c.block_of.assign(size, 0);
  return c;
}

bool refines(const Congruence& fine, const Congruence& coarse) {
  if (fine.size() != coarse.size()) return false;
  for (Elem a = 0; a < fine.size(); ++a)
    if (coarse.block_of[a] != coarse.block_of[fine.block_of[a]]) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Elem find(Elem a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  // Returns true when two classes were actually merged.
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    parent[b] = a;
    return true;
  }
};

std::vector<Elem> canonical_blocks(UnionFind& uf) {
  const int n = static_cast<int>(uf.parent.size());
  std::vector<Elem> block_of(n);
  for (Elem a = 0; a < n; ++a) block_of[a] = uf.find(a);
  return block_of;  // roots are the smallest members by the union rule
}

struct BlockVectorHash {
  size_t operator()(const std::vector<Elem>& v) const {
    size_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Congruence join(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    uf.unite(x, a.block_of[x]);
    uf.unite(x, b.block_of[x]);
  }
  Congruence out;
  out.kind = a.kind;
  out.block_of = canonical_blocks(uf);
  return out;
}

Congruence as_module_congruence(Congruence c) {
  c.kind = CongruenceKind::Semimodule;
  return c;
}

int StructureView::size() const { return ring ? ring->size : module->size; }

int StructureView::scalars() const {
  return ring ? ring->size : module->ring->size;
}

Elem StructureView::add(Elem a, Elem b) const {
  return ring ? ring->add(a, b) : module->add(a, b);
}

Elem StructureView::act(Elem a, Elem s) const {
  return ring ? ring->mul(a, s) : module->act(a, s);
}

Elem StructureView::lmul(Elem c, Elem a) const { return ring->mul(c, a); }

StructureView semiring_view(const FiniteSemiring& s) {
  StructureView v;
  v.ring = &s;
  v.kind = CongruenceKind::Semiring;
  return v;
}

StructureView module_view_of_semiring(const FiniteSemiring& s) {
  StructureView v;
  v.ring = &s;
  v.kind = CongruenceKind::Semimodule;
  return v;
}

StructureView module_view(const FiniteSemimodule& m) {
  StructureView v;
  v.module = &m;
  v.kind = CongruenceKind::Semimodule;
  return v;
}

bool is_congruence(const StructureView& v, const std::vector<Elem>& block_of) {
  const int n = v.size();
  if (block_of.size() != static_cast<size_t>(n)) return false;
  for (Elem a = 0; a < n; ++a) {
    Elem rep = block_of[a];
    if (rep < 0 || rep > a || block_of[rep] != rep) return false;
  }
  // a ~ rep(a) generates the relation, so checking consequences against the
  // representative suffices.
  for (Elem a = 0; a < n; ++a) {
    Elem rep = block_of[a];
    if (rep == a) continue;
    for (Elem c = 0; c < n; ++c)
      if (block_of[v.add(a, c)] != block_of[v.add(rep, c)]) return false;
    for (Elem s = 0; s < v.scalars(); ++s)
      if (block_of[v.act(a, s)] != block_of[v.act(rep, s)]) return false;
    if (v.kind == CongruenceKind::Semiring)
      for (Elem c = 0; c < n; ++c)
        if (block_of[v.lmul(c, a)] != block_of[v.lmul(c, rep)]) return false;
  }
  return true;
}

Congruence generated_congruence(
    const StructureView& v, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const int n = v.size();
  UnionFind uf(n);
  std::vector<std::pair<Elem, Elem>> work;
  auto push = [&](Elem a, Elem b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ShapeError("congruence generator out of range");
    push(a, b);
  }
  // Each merge event propagates its own consequences; transitivity via the
  // union-find covers cross pairs of previously merged elements.
  for (size_t i = 0; i < work.size(); ++i) {
    auto [a, b] = work[i];
    for (Elem c = 0; c < n; ++c) push(v.add(a, c), v.add(b, c));
    for (Elem s = 0; s < v.scalars(); ++s) push(v.act(a, s), v.act(b, s));
    if (v.kind == CongruenceKind::Semiring)
      for (Elem c = 0; c < n; ++c) push(v.lmul(c, a), v.lmul(c, b));
  }
  Congruence out;
  out.kind = v.kind;
  out.block_of = canonical_blocks(uf);
  return out;
}

bool enumerate_congruences(
    const StructureView& v, long cap,
    const std::function<bool(const Congruence&)>& sink) {
  const int n = v.size();
  std::vector<Congruence> found;
  std::unordered_set<std::vector<Elem>, BlockVectorHash> seen;
  auto emit = [&](Congruence c) -> bool {
    if (!seen.insert(c.block_of).second) return true;
    if (static_cast<long>(found.size()) >= cap)
      throw CongruenceLimitExceeded(cap);
    if (!is_congruence(v, c.block_of))
      throw std::logic_error("enumerated relation failed the congruence check");
    found.push_back(std::move(c));
    return sink(found.back());
  };
  if (!emit(diagonal_congruence(n, v.kind))) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (!emit(generated_congruence(v, {{a, b}}))) return false;
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Congruence c = join(found[i], found[j]);
      if (!emit(std::move(c))) return false;
    }
  return true;
}

CongruenceSet all_congruences(const StructureView& v, long cap) {
  CongruenceSet out;
  out.kind = v.kind;
  out.complete = enumerate_congruences(v, cap, [&](const Congruence& c) {
    out.congruences.push_back(c);
    return true;
  });
  std::sort(out.congruences.begin(), out.congruences.end(),
            [](const Congruence& a, const Congruence& b) {
              int na = a.num_blocks(), nb = b.num_blocks();
              if (na != nb) return na > nb;
              return a.block_of < b.block_of;
            });
  return out;
}

CongruenceSet all_congruences(const FiniteSemiring& s, CongruenceKind kind,
                              long cap) {
  return all_congruences(kind == CongruenceKind::Semiring
                             ? semiring_view(s)
                             : module_view_of_semiring(s),
                         cap);
}

CongruenceSet all_congruences(const FiniteSemimodule& m, long cap) {
  return all_congruences(module_view(m), cap);
}

Congruence bourne_congruence(const FiniteSemimodule& m,
                             const ElementSubset& k) {
  std::vector<int> witness;
  if (k.members.size() != static_cast<size_t>(m.size))
    throw ShapeError("subset mask has wrong length");
  if (!is_subsemimodule(m, k.members, &witness))
    throw NotASubsemimodule("Bourne congruence needs a subsemimodule", witness);
  const int n = m.size;
  std::vector<Elem> ks = ElementSubset{k.members}.elements();
  // reach[a] = { a + l : l in K }
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Elem a = 0; a < n; ++a)
    for (Elem l : ks) reach[a][m.add(a, l)] = true;
  auto related = [&](Elem a, Elem b) {
    for (Elem x = 0; x < n; ++x)
      if (reach[a][x] && reach[b][x]) return true;
    return false;
  };
  UnionFind uf(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (related(a, b)) uf.unite(a, b);
  Congruence out;
  out.kind = CongruenceKind::Semimodule;
  out.block_of = canonical_blocks(uf);
  // The relation is transitive for subsemimodules; a strict closure step
  // signals a bug.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (out.related(a, b) != related(a, b))
        throw std::logic_error("Bourne relation was not transitive");
  if (!is_congruence(module_view(m), out.block_of))
    throw std::logic_error("Bourne relation is not a congruence");
  return out;
}

Congruence diamond_congruence(const FiniteSemiring& s) {
  const int n = s.size;
  // multiples[a] = { k*a : k = 1..n }; the additive orbit cycles within n
  // steps, so larger k add nothing.
  std::vector<std::vector<bool>> multiples(n, std::vector<bool>(n, false));
  for (Elem a = 0; a < n; ++a) {
    Elem acc = s.zero;
    for (int k = 1; k <= n; ++k) {
      acc = s.add(acc, a);
      multiples[a][acc] = true;
    }
  }
  std::vector<std::vector<bool>> summands(n, std::vector<bool>(n, false));
  for (Elem b = 0; b < n; ++b)
    for (Elem x = 0; x < n; ++x) summands[b][s.add(b, x)] = true;
  auto half = [&](Elem a, Elem b) {
    for (Elem x = 0; x < n; ++x)
      if (multiples[a][x] && summands[b][x]) return true;
    return false;
  };
  UnionFind uf(n);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Elem a = 0; a < n; ++a) {
    rel[a][a] = true;
    for (Elem b = a + 1; b < n; ++b)
      if (half(a, b) && half(b, a)) {
        rel[a][b] = rel[b][a] = true;
        uf.unite(a, b);
      }
  }
  Congruence out;
  out.kind = CongruenceKind::Semiring;
  out.block_of = canonical_blocks(uf);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (out.related(a, b) != rel[a][b])
        throw std::logic_error("diamond relation was not transitive");
  if (!is_congruence(semiring_view(s), out.block_of))
    throw std::logic_error("diamond relation is not a semiring congruence");
  return out;
}

Congruence theta_plus_congruence(const SemiringPtr& s) {
  auto reg = regular_semimodule(s);
  auto iplus = distinguished_subset(*s, SubsetKind::AddIdempotents);
  Congruence c = bourne_congruence(*reg, iplus);
  c.kind = CongruenceKind::Semiring;
  if (!is_congruence(semiring_view(*s), c.block_of))
    throw std::logic_error(
        "Bourne congruence of the additive idempotents is not two-sided");
  return c;
}

Congruence matrix_congruence_lift(const SemiringPtr& s,
                                  const Congruence& theta, int n,
                                  const SemiringPtr& matrix_ring) {
  if (theta.kind != CongruenceKind::Semiring)
    throw KindMismatch("matrix lift needs a semiring congruence");
  if (theta.size() != s->size)
    throw ShapeError("congruence does not match the base semiring");
  long expect = 1;
  for (int i = 0; i < n * n; ++i) expect *= s->size;
  if (matrix_ring->size != expect)
    throw ShapeError("matrix semiring does not match the lift dimensions");
  Congruence out;
  out.kind = CongruenceKind::Semiring;
  out.block_of.resize(matrix_ring->size);
  for (Elem x = 0; x < matrix_ring->size; ++x) {
    auto entries = matrix_decode(*s, n, x);
    for (Elem& e : entries) e = theta.block_of[e];
    out.block_of[x] = matrix_encode(*s, n, entries);
  }
  if (!is_congruence(semiring_view(*matrix_ring), out.block_of))
    throw std::logic_error("entrywise lift is not a semiring congruence");
  return out;
}

namespace {

std::vector<Elem> block_index_map(const Congruence& c,
                                  std::vector<Elem>& reps) {
  reps.clear();
  std::vector<Elem> index_of(c.size(), -1);
  for (Elem a = 0; a < c.size(); ++a)
    if (c.block_of[a] == a) {
      index_of[a] = static_cast<Elem>(reps.size());
      reps.push_back(a);
    }
  std::vector<Elem> proj(c.size());
  for (Elem a = 0; a < c.size(); ++a) proj[a] = index_of[c.block_of[a]];
  return proj;
}

std::string block_label(const Congruence& c, const std::vector<std::string>& labels,
                        Elem rep) {
  std::string out = "{";
  bool first = true;
  for (Elem a = 0; a < c.size(); ++a)
    if (c.block_of[a] == rep) {
      if (!first) out += ",";
      out += labels[a];
      first = false;
    }
  return out + "}";
}

}  // namespace

SemiringQuotient quotient_semiring(const SemiringPtr& s, const Congruence& c) {
  if (c.kind != CongruenceKind::Semiring)
    throw KindMismatch("semiring quotient needs a semiring congruence");
  if (c.size() != s->size)
    throw ShapeError("congruence does not match the carrier");
  if (!is_congruence(semiring_view(*s), c.block_of))
    throw KindMismatch("relation is not a semiring congruence");
  std::vector<Elem> reps;
  std::vector<Elem> proj = block_index_map(c, reps);
  const int k = static_cast<int>(reps.size());
  FiniteSemiring q;
  q.size = k;
  q.add_table.resize(static_cast<size_t>(k) * k);
  q.mul_table.resize(static_cast<size_t>(k) * k);
  q.labels.resize(k);
  for (int i = 0; i < k; ++i) {
    q.labels[i] = block_label(c, s->labels, reps[i]);
    for (int j = 0; j < k; ++j) {
      q.add_table[i * k + j] = proj[s->add(reps[i], reps[j])];
      q.mul_table[i * k + j] = proj[s->mul(reps[i], reps[j])];
    }
  }
  q.zero = proj[s->zero];
  q.one = proj[s->one];
  q.name = (s->name.empty() ? "S" : s->name) + "/~";
  return {finish_semiring(std::move(q)), std::move(proj)};
}

ModuleQuotient quotient_semimodule(const ModulePtr& m, const Congruence& c) {
  if (c.kind != CongruenceKind::Semimodule)
    throw KindMismatch("semimodule quotient needs a semimodule congruence");
  if (c.size() != m->size)
    throw ShapeError("congruence does not match the carrier");
  if (!is_congruence(module_view(*m), c.block_of))
    throw KindMismatch("relation is not a semimodule congruence");
  std::vector<Elem> reps;
  std::vector<Elem> proj = block_index_map(c, reps);
  const int k = static_cast<int>(reps.size());
  FiniteSemimodule q;
  q.ring = m->ring;
  q.size = k;
  q.add_table.resize(static_cast<size_t>(k) * k);
  q.action_table.resize(static_cast<size_t>(k) * m->ring->size);
  q.labels.resize(k);
  for (int i = 0; i < k; ++i) {
    q.labels[i] = block_label(c, m->labels, reps[i]);
    for (int j = 0; j < k; ++j)
      q.add_table[i * k + j] = proj[m->add(reps[i], reps[j])];
    for (Elem r = 0; r < m->ring->size; ++r)
      q.action_table[i * m->ring->size + r] = proj[m->act(reps[i], r)];
  }
  q.zero = proj[m->zero];
  q.name = (m->name.empty() ? "M" : m->name) + "/~";
  ModulePtr qp = finish_semimodule(std::move(q));
  SemimoduleHom h;
  h.source = m;
  h.target = qp;
  h.map = std::move(proj);
  return {qp, std::move(h)};
}

}  // namespace semiring_lab
