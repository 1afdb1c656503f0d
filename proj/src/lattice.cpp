#include "semiring_lab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/iso.hpp"
#include "semiring_lab/projectivity.hpp"

namespace semiring_lab {

namespace {

void default_labels(FiniteLattice& l) {
  if (!l.labels.empty()) return;
  l.labels.resize(l.size);
  for (Elem a = 0; a < l.size; ++a) l.labels[a] = std::to_string(a);
}

void derive_tables(FiniteLattice& l) {
  const int n = l.size;
  // bounds first: a poset with several maximal elements is diagnosed as
  // unbounded rather than as a missing join
  Elem bottom = -1, top = -1;
  for (Elem a = 0; a < n; ++a) {
    bool is_bottom = true, is_top = true;
    for (Elem b = 0; b < n; ++b) {
      is_bottom = is_bottom && l.le(a, b);
      is_top = is_top && l.le(b, a);
    }
    if (is_bottom) bottom = a;
    if (is_top) top = a;
  }
  if (bottom < 0 || top < 0) throw Unbounded("lattice has no global bounds");
  l.bottom = bottom;
  l.top = top;
  l.join_table.assign(static_cast<size_t>(n) * n, -1);
  l.meet_table.assign(static_cast<size_t>(n) * n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      Elem lub = -1, glb = -1;
      for (Elem c = 0; c < n; ++c) {
        if (l.le(a, c) && l.le(b, c) && (lub < 0 || l.le(c, lub))) lub = c;
        if (l.le(c, a) && l.le(c, b) && (glb < 0 || l.le(glb, c))) glb = c;
      }
      // candidate found greedily; verify it really bounds every bound
      if (lub >= 0)
        for (Elem c = 0; c < n; ++c)
          if (l.le(a, c) && l.le(b, c) && !l.le(lub, c)) lub = -1;
      if (glb >= 0)
        for (Elem c = 0; c < n; ++c)
          if (l.le(c, a) && l.le(c, b) && !l.le(c, glb)) glb = -1;
      if (lub < 0)
        throw NotALattice("no least upper bound for {" + std::to_string(a) +
                          "," + std::to_string(b) + "}");
      if (glb < 0)
        throw NotALattice("no greatest lower bound for {" + std::to_string(a) +
                          "," + std::to_string(b) + "}");
      l.join_table[a * n + b] = l.join_table[b * n + a] = lub;
      l.meet_table[a * n + b] = l.meet_table[b * n + a] = glb;
    }
}

}  // namespace

FiniteLattice validate_lattice(int size, std::vector<bool> leq,
                               std::vector<std::string> labels,
                               std::string name) {
  if (size <= 0) throw ShapeError("carrier size must be positive");
  if (leq.size() != static_cast<size_t>(size) * size)
    throw ShapeError("order table is not size*size");
  FiniteLattice l;
  l.size = size;
  l.leq = std::move(leq);
  l.labels = std::move(labels);
  l.name = std::move(name);
  for (Elem a = 0; a < size; ++a)
    if (!l.le(a, a)) throw NotAPoset("order not reflexive");
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b) {
      if (a != b && l.le(a, b) && l.le(b, a))
        throw NotAPoset("order not antisymmetric");
      if (l.le(a, b))
        for (Elem c = 0; c < size; ++c)
          if (l.le(b, c) && !l.le(a, c)) throw NotAPoset("order not transitive");
    }
  derive_tables(l);
  default_labels(l);
  return l;
}

FiniteLattice lattice_from_join(int size, const std::vector<Elem>& join,
                                std::vector<std::string> labels,
                                std::string name) {
  if (join.size() != static_cast<size_t>(size) * size)
    throw ShapeError("join table is not size*size");
  std::vector<bool> leq(static_cast<size_t>(size) * size, false);
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b)
      leq[a * size + b] = join[a * size + b] == b;
  return validate_lattice(size, std::move(leq), std::move(labels),
                          std::move(name));
}

ModulePtr as_semimodule(const FiniteLattice& l) {
  FiniteSemimodule m;
  m.ring = boolean_semifield();
  m.size = l.size;
  m.add_table.resize(static_cast<size_t>(l.size) * l.size);
  for (Elem a = 0; a < l.size; ++a)
    for (Elem b = 0; b < l.size; ++b)
      m.add_table[a * l.size + b] = l.join(a, b);
  m.zero = l.bottom;
  m.action_table.resize(static_cast<size_t>(l.size) * 2);
  for (Elem a = 0; a < l.size; ++a) {
    m.action_table[a * 2 + 0] = l.bottom;
    m.action_table[a * 2 + 1] = a;
  }
  m.labels = l.labels;
  m.name = l.name;
  return finish_semimodule(std::move(m));
}

FiniteLattice lattice_from_module(const FiniteSemimodule& m) {
  return lattice_from_join(m.size, m.add_table, m.labels, m.name);
}

DistributivityReport is_distributive(const FiniteLattice& l) {
  DistributivityReport r;
  r.distributive = true;
  for (Elem x = 0; x < l.size && r.distributive; ++x)
    for (Elem y = 0; y < l.size && r.distributive; ++y)
      for (Elem z = 0; z < l.size && r.distributive; ++z)
        if (l.meet(x, l.join(y, z)) !=
            l.join(l.meet(x, y), l.meet(x, z))) {
          r.distributive = false;
          r.witness_triple = {x, y, z};
        }
  if (r.distributive) return r;
  // A non-distributive lattice contains a pentagon or diamond sublattice;
  // search the 5-subsets.
  std::vector<Elem> pick(5);
  std::function<bool(int, Elem)> rec = [&](int k, Elem start) -> bool {
    if (k == 5) {
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          Elem jn = l.join(pick[i], pick[j]), mt = l.meet(pick[i], pick[j]);
          if (std::find(pick.begin(), pick.end(), jn) == pick.end() ||
              std::find(pick.begin(), pick.end(), mt) == pick.end())
            return false;
        }
      // bounds within the subset
      Elem bot = pick[0], top = pick[0];
      for (Elem e : pick) {
        bot = l.meet(bot, e);
        top = l.join(top, e);
      }
      std::vector<Elem> mid;
      for (Elem e : pick)
        if (e != bot && e != top) mid.push_back(e);
      if (mid.size() != 3) return false;
      int comparable = 0;
      std::pair<Elem, Elem> cmp{-1, -1};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i != j && l.le(mid[i], mid[j])) {
            ++comparable;
            cmp = {mid[i], mid[j]};
          }
        }
      auto pairwise = [&](Elem a, Elem b) {
        return l.join(a, b) == top && l.meet(a, b) == bot;
      };
      if (comparable == 0) {
        if (pairwise(mid[0], mid[1]) && pairwise(mid[0], mid[2]) &&
            pairwise(mid[1], mid[2])) {
          r.forbidden_sublattice = {bot, mid[0], mid[1], mid[2], top};
          r.forbidden_kind = "M3";
          return true;
        }
        return false;
      }
      if (comparable == 1) {
        Elem b = cmp.first, c = cmp.second;
        Elem a = -1;
        for (Elem e : mid)
          if (e != b && e != c) a = e;
        if (pairwise(a, b) && pairwise(a, c)) {
          r.forbidden_sublattice = {bot, a, b, c, top};
          r.forbidden_kind = "N5";
          return true;
        }
        return false;
      }
      return false;
    }
    for (Elem e = start; e < l.size; ++e) {
      pick[k] = e;
      if (rec(k + 1, e + 1)) return true;
    }
    return false;
  };
  if (!rec(0, 0))
    throw std::logic_error(
        "non-distributive lattice without a forbidden sublattice");
  return r;
}

CongruenceSet lattice_congruences(const FiniteLattice& l, long cap) {
  return all_congruences(*as_semimodule(l), cap);
}

TChain t_chain(const FiniteLattice& l) {
  TChain t;
  for (Elem m = 0; m < l.size; ++m) {
    bool comparable = true;
    for (Elem x = 0; x < l.size && comparable; ++x)
      comparable = l.le(x, m) || l.le(m, x);
    if (comparable) t.members.push_back(m);
  }
  std::sort(t.members.begin(), t.members.end(),
            [&](Elem a, Elem b) { return a != b && l.le(a, b); });
  return t;
}

FiniteLattice interval(const FiniteLattice& l, Elem a, Elem b) {
  if (!l.le(a, b)) throw NotComparable("interval endpoints not comparable");
  std::vector<Elem> elems;
  for (Elem x = 0; x < l.size; ++x)
    if (l.le(a, x) && l.le(x, b)) elems.push_back(x);
  const int n = static_cast<int>(elems.size());
  std::vector<bool> leq(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = l.label(elems[i]);
    for (int j = 0; j < n; ++j) leq[i * n + j] = l.le(elems[i], elems[j]);
  }
  return validate_lattice(n, std::move(leq), std::move(labels),
                          "[" + l.label(a) + "," + l.label(b) + "]");
}

bool is_simple_interval(const FiniteLattice& l, Elem a, Elem b) {
  if (!l.le(a, b)) throw NotComparable("interval endpoints not comparable");
  if (a == b) return false;
  for (Elem x = 0; x < l.size; ++x)
    if (x != a && x != b && l.le(a, x) && l.le(x, b)) return false;
  return true;
}

bool quotient_distributivity_condition(const FiniteLattice& l, long cap) {
  auto mod = as_semimodule(l);
  auto set = all_congruences(*mod, cap);
  if (!set.complete) throw CongruenceLimitExceeded(cap);
  for (const auto& c : set.congruences) {
    auto q = quotient_semimodule(mod, c);
    if (!is_distributive(lattice_from_module(*q.quotient)).distributive)
      return false;
  }
  return true;
}

bool tchain_interval_condition(const FiniteLattice& l) {
  if (!is_distributive(l).distributive)
    throw NotDistributive("the interval condition expects a distributive lattice");
  auto t = t_chain(l);
  for (size_t i = 0; i + 1 < t.members.size(); ++i) {
    Elem lo = t.members[i], hi = t.members[i + 1];
    std::vector<Elem> elems;
    for (Elem x = 0; x < l.size; ++x)
      if (l.le(lo, x) && l.le(x, hi)) elems.push_back(x);
    if (elems.size() == 2) continue;
    if (elems.size() != 4) return false;
    // two incomparable middles over lo joining to hi: the 2x2 square
    std::vector<Elem> mid;
    for (Elem e : elems)
      if (e != lo && e != hi) mid.push_back(e);
    if (l.le(mid[0], mid[1]) || l.le(mid[1], mid[0])) return false;
  }
  return true;
}

std::vector<Elem> join_irreducibles(const FiniteLattice& l) {
  std::vector<Elem> out;
  for (Elem j = 0; j < l.size; ++j) {
    if (j == l.bottom) continue;
    Elem below = l.bottom;
    for (Elem x = 0; x < l.size; ++x)
      if (x != j && l.le(x, j)) below = l.join(below, x);
    if (below != j) out.push_back(j);
  }
  return out;
}

Elem EndomorphismSemiring::index_of(const std::vector<Elem>& map) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), map);
  if (it == maps.end() || *it != map)
    throw BadParams("map is not an endomorphism of the lattice");
  return static_cast<Elem>(it - maps.begin());
}

EndomorphismSemiring endomorphism_semiring(const FiniteLattice& l,
                                           int size_cap) {
  EndomorphismSemiring endo;
  endo.lattice = l;
  auto ji = join_irreducibles(l);
  // linear extension: lower elements first
  std::sort(ji.begin(), ji.end(), [&](Elem a, Elem b) {
    int ca = 0, cb = 0;
    for (Elem x = 0; x < l.size; ++x) {
      ca += l.le(x, a);
      cb += l.le(x, b);
    }
    if (ca != cb) return ca < cb;
    return a < b;
  });
  const int k = static_cast<int>(ji.size());
  std::vector<std::vector<Elem>> ji_below(l.size);
  for (Elem x = 0; x < l.size; ++x)
    for (int i = 0; i < k; ++i)
      if (l.le(ji[i], x)) ji_below[x].push_back(i);
  std::set<std::vector<Elem>> collected;
  std::vector<Elem> assign(k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      std::vector<Elem> f(l.size);
      for (Elem x = 0; x < l.size; ++x) {
        Elem acc = l.bottom;
        for (int t : ji_below[x]) acc = l.join(acc, assign[t]);
        f[x] = acc;
      }
      for (int t = 0; t < k; ++t)
        if (f[ji[t]] != assign[t]) return;  // regenerated by its restriction
      for (Elem a = 0; a < l.size; ++a)
        for (Elem b = a + 1; b < l.size; ++b)
          if (f[l.join(a, b)] != l.join(f[a], f[b])) return;
      if (static_cast<long>(collected.size()) >= size_cap)
        throw SizeCapExceeded("endomorphism semiring exceeds the size cap");
      collected.insert(std::move(f));
      return;
    }
    for (Elem v = 0; v < l.size; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (l.le(ji[j], ji[i]) && !l.le(assign[j], v)) ok = false;
        if (l.le(ji[i], ji[j]) && !l.le(v, assign[j])) ok = false;
      }
      if (!ok) continue;
      assign[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  endo.maps.assign(collected.begin(), collected.end());
  const int n = static_cast<int>(endo.maps.size());
  std::map<std::vector<Elem>, Elem> index;
  for (int i = 0; i < n; ++i) index[endo.maps[i]] = i;
  FiniteSemiring s;
  s.size = n;
  s.add_table.resize(static_cast<size_t>(n) * n);
  s.mul_table.resize(static_cast<size_t>(n) * n);
  s.labels.resize(n);
  std::vector<Elem> buf(l.size);
  for (int i = 0; i < n; ++i) {
    std::string label = "<";
    for (Elem x = 0; x < l.size; ++x) {
      if (x) label += ",";
      label += l.label(endo.maps[i][x]);
    }
    s.labels[i] = label + ">";
    for (int j = 0; j < n; ++j) {
      for (Elem x = 0; x < l.size; ++x)
        buf[x] = l.join(endo.maps[i][x], endo.maps[j][x]);
      auto it = index.find(buf);
      if (it == index.end())
        throw std::logic_error("pointwise join left the endomorphism set");
      s.add_table[i * n + j] = it->second;
      for (Elem x = 0; x < l.size; ++x) buf[x] = endo.maps[i][endo.maps[j][x]];
      it = index.find(buf);
      if (it == index.end())
        throw std::logic_error("composition left the endomorphism set");
      s.mul_table[i * n + j] = it->second;
    }
  }
  s.zero = index.at(std::vector<Elem>(l.size, l.bottom));
  std::vector<Elem> identity(l.size);
  std::iota(identity.begin(), identity.end(), 0);
  s.one = index.at(identity);
  s.name = "End(" + (l.name.empty() ? "M" : l.name) + ")";
  endo.ring = finish_semiring(std::move(s));
  return endo;
}

Elem step_endomorphism(const EndomorphismSemiring& endo, Elem a, Elem b) {
  const FiniteLattice& l = endo.lattice;
  if (a < 0 || a >= l.size || b < 0 || b >= l.size)
    throw BadParams("step endomorphism parameters out of range");
  std::vector<Elem> f(l.size);
  for (Elem x = 0; x < l.size; ++x) f[x] = l.le(x, a) ? l.bottom : b;
  return endo.index_of(f);
}

ModuleEndomorphisms module_endomorphism_semiring(const ModulePtr& m,
                                                 int size_cap) {
  auto gens = greedy_generating_set(*m);
  std::set<std::vector<Elem>> collected;
  // assignment of images to generators, closed as a graph
  std::vector<Elem> images(gens.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == gens.size()) {
      std::vector<Elem> func(m->size, -1);
      std::vector<std::pair<Elem, Elem>> pairs;
      auto push = [&](Elem a, Elem v) {
        if (func[a] == v) return true;
        if (func[a] >= 0) return false;
        func[a] = v;
        pairs.emplace_back(a, v);
        return true;
      };
      bool ok = push(m->zero, m->zero);
      for (size_t t = 0; t < gens.size() && ok; ++t) ok = push(gens[t], images[t]);
      for (size_t p = 0; p < pairs.size() && ok; ++p) {
        auto [a, v] = pairs[p];
        for (size_t q = 0; q <= p && ok; ++q) {
          auto [b, w] = pairs[q];
          ok = push(m->add(a, b), m->add(v, w));
        }
        for (Elem s = 0; s < m->ring->size && ok; ++s)
          ok = push(m->act(a, s), m->act(v, s));
      }
      if (!ok) return;
      if (static_cast<long>(collected.size()) >= size_cap)
        throw SizeCapExceeded("endomorphism semiring exceeds the size cap");
      collected.insert(std::move(func));
      return;
    }
    for (Elem v = 0; v < m->size; ++v) {
      images[i] = v;
      rec(i + 1);
    }
  };
  if (gens.empty()) {
    collected.insert(std::vector<Elem>(m->size, m->zero));
  } else {
    rec(0);
  }
  ModuleEndomorphisms endo;
  endo.module = m;
  endo.maps.assign(collected.begin(), collected.end());
  const int n = static_cast<int>(endo.maps.size());
  std::map<std::vector<Elem>, Elem> index;
  for (int i = 0; i < n; ++i) index[endo.maps[i]] = i;
  FiniteSemiring s;
  s.size = n;
  s.add_table.resize(static_cast<size_t>(n) * n);
  s.mul_table.resize(static_cast<size_t>(n) * n);
  std::vector<Elem> buf(m->size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (Elem x = 0; x < m->size; ++x)
        buf[x] = m->add(endo.maps[i][x], endo.maps[j][x]);
      auto it = index.find(buf);
      if (it == index.end())
        throw std::logic_error("pointwise sum left the endomorphism set");
      s.add_table[i * n + j] = it->second;
      for (Elem x = 0; x < m->size; ++x) buf[x] = endo.maps[i][endo.maps[j][x]];
      it = index.find(buf);
      if (it == index.end())
        throw std::logic_error("composition left the endomorphism set");
      s.mul_table[i * n + j] = it->second;
    }
  s.zero = index.at(std::vector<Elem>(m->size, m->zero));
  std::vector<Elem> identity(m->size);
  std::iota(identity.begin(), identity.end(), 0);
  s.one = index.at(identity);
  s.name = "End(" + (m->name.empty() ? "M" : m->name) + ")";
  endo.ring = finish_semiring(std::move(s));
  return endo;
}

FiniteLattice downset_lattice(const Poset& p, int size_cap) {
  if (p.size < 0 || p.size > 20)
    throw SizeCapExceeded("poset too large for down-set enumeration");
  std::vector<int> downsets;
  const int total = 1 << p.size;
  for (int bits = 0; bits < total; ++bits) {
    bool closed = true;
    for (int a = 0; a < p.size && closed; ++a)
      if (bits >> a & 1)
        for (int b = 0; b < p.size && closed; ++b)
          if (p.leq[b * p.size + a] && !(bits >> b & 1)) closed = false;
    if (closed) downsets.push_back(bits);
  }
  if (static_cast<int>(downsets.size()) > size_cap)
    throw SizeCapExceeded("down-set lattice exceeds the size cap");
  std::sort(downsets.begin(), downsets.end(), [](int a, int b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  const int n = static_cast<int>(downsets.size());
  std::vector<bool> leq(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string label = "{";
    bool first = true;
    for (int a = 0; a < p.size; ++a)
      if (downsets[i] >> a & 1) {
        if (!first) label += ",";
        label += std::to_string(a);
        first = false;
      }
    labels[i] = label + "}";
    for (int j = 0; j < n; ++j)
      leq[i * n + j] = (downsets[i] & ~downsets[j]) == 0;
  }
  return validate_lattice(n, std::move(leq), std::move(labels),
                          "downsets(" + std::to_string(p.size) + ")");
}

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1 || n > 6) throw SizeCapExceeded("poset enumeration supports 1..6");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  std::set<std::vector<bool>> seen;
  std::vector<int> choice(pairs.size(), 0);  // 0 none, 1 i<j, 2 j<i
  std::vector<int> perm(n);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == pairs.size()) {
      std::vector<bool> leq(static_cast<size_t>(n) * n, false);
      for (int i = 0; i < n; ++i) leq[i * n + i] = true;
      for (size_t t = 0; t < pairs.size(); ++t) {
        if (choice[t] == 1) leq[pairs[t].first * n + pairs[t].second] = true;
        if (choice[t] == 2) leq[pairs[t].second * n + pairs[t].first] = true;
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (leq[a * n + b])
            for (int c = 0; c < n; ++c)
              if (leq[b * n + c] && !leq[a * n + c]) return;  // not transitive
      // canonical form: lexicographically minimal relabeled matrix
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<bool> best = leq;
      do {
        std::vector<bool> cand(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            cand[perm[a] * n + perm[b]] = leq[a * n + b];
        if (cand < best) best = cand;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) out.push_back(Poset{n, std::move(best)});
      return;
    }
    for (int c = 0; c < 3; ++c) {
      choice[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const Poset& a, const Poset& b) { return a.leq < b.leq; });
  return out;
}

std::vector<FiniteLattice> enumerate_distributive_lattices(int max_poset_size,
                                                           int size_cap) {
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_poset_size; ++n)
    for (const auto& p : enumerate_posets(n))
      out.push_back(downset_lattice(p, size_cap));
  return out;
}

BooleanDecomposition boolean_base_decomposition(const ModulePtr& m) {
  const SemiringPtr& base = m->ring;
  {
    // Boolean-algebra sanity: idempotent commutative with complements.
    for (Elem a = 0; a < base->size; ++a) {
      if (base->add(a, a) != a || base->mul(a, a) != a)
        throw NotBooleanBase("base semiring is not a Boolean algebra");
      bool complemented = false;
      for (Elem b = 0; b < base->size && !complemented; ++b)
        complemented =
            base->add(a, b) == base->one && base->mul(a, b) == base->zero;
      if (!complemented)
        throw NotBooleanBase("base semiring is not complemented");
      for (Elem b = 0; b < base->size; ++b) {
        if (base->mul(a, b) != base->mul(b, a) ||
            base->add(a, base->mul(a, b)) != a ||
            base->mul(a, base->add(a, b)) != a)
          throw NotBooleanBase("base semiring is not a Boolean algebra");
      }
    }
  }
  BooleanDecomposition out;
  ElementSubset ann;
  ann.members.resize(base->size);
  for (Elem b = 0; b < base->size; ++b) {
    bool kills = true;
    for (Elem x = 0; x < m->size && kills; ++x) kills = m->act(x, b) == m->zero;
    ann.members[b] = kills;
    if (kills) out.annihilator.push_back(b);
  }
  auto reg = regular_semimodule(base);
  Congruence c = bourne_congruence(*reg, ann);
  c.kind = CongruenceKind::Semiring;
  if (!is_congruence(semiring_view(*base), c.block_of))
    throw std::logic_error("annihilator congruence is not two-sided");
  auto q = quotient_semiring(base, c);
  out.base_quotient = q.quotient;
  const FiniteSemiring& bq = *q.quotient;
  // atoms of the quotient order x <= y iff x+y = y
  auto leq = [&](Elem x, Elem y) { return bq.add(x, y) == y; };
  for (Elem a = 0; a < bq.size; ++a) {
    if (a == bq.zero) continue;
    bool atom = true;
    for (Elem z = 0; z < bq.size && atom; ++z)
      if (z != bq.zero && z != a && leq(z, a)) atom = false;
    if (!atom) continue;
    Elem rep = -1;
    for (Elem x = 0; x < base->size && rep < 0; ++x)
      if (q.projection[x] == a) rep = x;
    std::vector<bool> mask(m->size, false);
    for (Elem x = 0; x < m->size; ++x) mask[m->act(x, rep)] = true;
    auto comp = submodule(*m, mask, "component(" + base->label(rep) + ")");
    out.components.push_back(
        {rep, lattice_from_join(comp->size, comp->add_table, comp->labels,
                                comp->name)});
  }
  return out;
}

std::optional<std::vector<Elem>> are_isomorphic(const FiniteLattice& a,
                                                const FiniteLattice& b) {
  if (a.size != b.size) return std::nullopt;
  AlgebraSig sa, sb;
  sa.size = a.size;
  sa.binary = {a.join_table};
  sa.constants = {a.bottom};
  sb.size = b.size;
  sb.binary = {b.join_table};
  sb.constants = {b.bottom};
  return find_isomorphism(sa, sb);
}

FiniteLattice diamond_m3() {
  // 0 < a,b,c < 1 with incomparable middles
  const int n = 5;
  std::vector<bool> leq(n * n, false);
  auto set = [&](Elem x, Elem y) { leq[x * n + y] = true; };
  for (Elem x = 0; x < n; ++x) set(x, x);
  for (Elem mid : {1, 2, 3}) {
    set(0, mid);
    set(mid, 4);
  }
  set(0, 4);
  return validate_lattice(n, std::move(leq), {"0", "a", "b", "c", "1"}, "M3");
}

FiniteLattice pentagon_n5() {
  // 0 < a < 1, 0 < b < c < 1, a incomparable to b and c
  const int n = 5;
  std::vector<bool> leq(n * n, false);
  auto set = [&](Elem x, Elem y) { leq[x * n + y] = true; };
  for (Elem x = 0; x < n; ++x) set(x, x);
  set(0, 1);
  set(0, 2);
  set(0, 3);
  set(0, 4);
  set(1, 4);
  set(2, 3);
  set(2, 4);
  set(3, 4);
  return validate_lattice(n, std::move(leq), {"0", "a", "b", "c", "1"}, "N5");
}

FiniteLattice chain_lattice(int n) {
  if (n <= 0) throw BadParams("chain length must be positive");
  std::vector<bool> leq(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq[a * n + b] = a <= b;
  return validate_lattice(n, std::move(leq), {}, "C" + std::to_string(n));
}

}  // namespace semiring_lab
