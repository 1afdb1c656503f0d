#include "semiring_lab/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace semiring_lab {

AlgebraSig semiring_sig(const FiniteSemiring& s) {
  AlgebraSig sig;
  sig.size = s.size;
  sig.binary = {s.add_table, s.mul_table};
  sig.constants = {s.zero, s.one};
  return sig;
}

AlgebraSig module_sig(const FiniteSemimodule& m) {
  AlgebraSig sig;
  sig.size = m.size;
  sig.binary = {m.add_table};
  sig.unary.resize(m.ring->size);
  for (Elem s = 0; s < m.ring->size; ++s) {
    sig.unary[s].resize(m.size);
    for (Elem a = 0; a < m.size; ++a) sig.unary[s][a] = m.act(a, s);
  }
  sig.constants = {m.zero};
  return sig;
}

std::vector<int> invariant_colors(const AlgebraSig& sig) {
  const int n = sig.size;
  std::vector<int> color(n, 0);
  for (size_t k = 0; k < sig.constants.size(); ++k)
    color[sig.constants[k]] = static_cast<int>(k) + 1;
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sigs(n);
    for (Elem a = 0; a < n; ++a) {
      auto& v = sigs[a];
      v.push_back(color[a]);
      for (const auto& table : sig.binary) {
        std::vector<int> local;
        local.reserve(2 * n);
        for (Elem b = 0; b < n; ++b) {
          local.push_back(color[table[a * n + b]] * (n + 1) + color[b]);
          local.push_back(color[table[b * n + a]] * (n + 1) + color[b]);
        }
        std::sort(local.begin(), local.end());
        v.insert(v.end(), local.begin(), local.end());
      }
      for (const auto& u : sig.unary) v.push_back(color[u[a]]);
    }
    std::vector<std::vector<int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Elem a = 0; a < n; ++a)
      color[a] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[a]) -
          sorted.begin());
    int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

namespace {

bool compatible_profiles(const std::vector<int>& ca, const std::vector<int>& cb) {
  std::map<int, int> pa, pb;
  for (int c : ca) ++pa[c];
  for (int c : cb) ++pb[c];
  return pa == pb;
}

struct IsoSearch {
  const AlgebraSig& a;
  const AlgebraSig& b;
  std::vector<int> ca, cb;
  std::vector<Elem> map;      // a -> b, -1 unassigned
  std::vector<bool> used;     // over b
  std::vector<Elem> order;    // assignment order over a
  std::vector<std::vector<Elem>> candidates;  // per a-element

  bool consistent(Elem x, Elem y) const {
    const int n = a.size;
    for (size_t t = 0; t < a.binary.size(); ++t) {
      const auto& ta = a.binary[t];
      const auto& tb = b.binary[t];
      for (Elem z = 0; z < n; ++z) {
        if (map[z] < 0 && z != x) continue;
        Elem zy = z == x ? y : map[z];
        Elem r1 = ta[x * n + z];
        Elem i1 = r1 == x ? y : map[r1];
        if (i1 >= 0 && i1 != tb[y * n + zy]) return false;
        Elem r2 = ta[z * n + x];
        Elem i2 = r2 == x ? y : map[r2];
        if (i2 >= 0 && i2 != tb[zy * n + y]) return false;
      }
    }
    for (size_t t = 0; t < a.unary.size(); ++t) {
      Elem r = a.unary[t][x];
      Elem i = r == x ? y : map[r];
      if (i >= 0 && i != b.unary[t][y]) return false;
    }
    return true;
  }

  // The incremental checks skip products of two assigned elements whose
  // result is only assigned later, so the leaf runs the full table check and
  // backtracks on a miss.
  bool extend(size_t pos) {
    if (pos == order.size()) return full_map_check();
    Elem x = order[pos];
    for (Elem y : candidates[x]) {
      if (used[y] || !consistent(x, y)) continue;
      map[x] = y;
      used[y] = true;
      if (extend(pos + 1)) return true;
      map[x] = -1;
      used[y] = false;
    }
    return false;
  }

  bool full_map_check() const {
    const int n = a.size;
    for (size_t t = 0; t < a.binary.size(); ++t)
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (map[a.binary[t][x * n + y]] != b.binary[t][map[x] * n + map[y]])
            return false;
    for (size_t t = 0; t < a.unary.size(); ++t)
      for (Elem x = 0; x < n; ++x)
        if (map[a.unary[t][x]] != b.unary[t][map[x]]) return false;
    for (size_t k = 0; k < a.constants.size(); ++k)
      if (map[a.constants[k]] != b.constants[k]) return false;
    return true;
  }
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const AlgebraSig& a,
                                                  const AlgebraSig& b) {
  if (a.size != b.size || a.binary.size() != b.binary.size() ||
      a.unary.size() != b.unary.size() ||
      a.constants.size() != b.constants.size())
    return std::nullopt;
  IsoSearch search{a, b, invariant_colors(a), invariant_colors(b),
                   std::vector<Elem>(a.size, -1),
                   std::vector<bool>(b.size, false),
                   {},
                   {}};
  if (!compatible_profiles(search.ca, search.cb)) return std::nullopt;
  search.candidates.resize(a.size);
  for (Elem x = 0; x < a.size; ++x)
    for (Elem y = 0; y < b.size; ++y)
      if (search.ca[x] == search.cb[y]) search.candidates[x].push_back(y);
  // Pin the constants first, then most-constrained elements.
  std::vector<bool> pinned(a.size, false);
  for (size_t k = 0; k < a.constants.size(); ++k) {
    Elem x = a.constants[k], y = b.constants[k];
    if (search.ca[x] != search.cb[y]) return std::nullopt;
    if (search.map[x] >= 0) {
      if (search.map[x] != y) return std::nullopt;
      continue;
    }
    if (search.used[y]) return std::nullopt;
    search.map[x] = y;
    search.used[y] = true;
    pinned[x] = true;
  }
  for (Elem x = 0; x < a.size; ++x)
    if (!pinned[x]) search.order.push_back(x);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](Elem l, Elem r) {
                     return search.candidates[l].size() <
                            search.candidates[r].size();
                   });
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

std::optional<std::vector<Elem>> are_isomorphic(const FiniteSemiring& a,
                                                const FiniteSemiring& b) {
  if (a.size != b.size) return std::nullopt;
  return find_isomorphism(semiring_sig(a), semiring_sig(b));
}

std::optional<std::vector<Elem>> are_isomorphic(const FiniteSemimodule& a,
                                                const FiniteSemimodule& b) {
  if (a.size != b.size) return std::nullopt;
  if (!same_semiring(*a.ring, *b.ring)) return std::nullopt;
  return find_isomorphism(module_sig(a), module_sig(b));
}

namespace {

std::vector<Elem> relabeled_bytes(const AlgebraSig& sig,
                                  const std::vector<Elem>& perm) {
  const int n = sig.size;
  std::vector<Elem> bytes;
  bytes.reserve(sig.binary.size() * n * n + sig.unary.size() * n + 1);
  bytes.push_back(n);
  for (const auto& table : sig.binary) {
    std::vector<Elem> t(static_cast<size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        t[perm[x] * n + perm[y]] = perm[table[x * n + y]];
    bytes.insert(bytes.end(), t.begin(), t.end());
  }
  for (const auto& u : sig.unary) {
    std::vector<Elem> t(n);
    for (Elem x = 0; x < n; ++x) t[perm[x]] = perm[u[x]];
    bytes.insert(bytes.end(), t.begin(), t.end());
  }
  return bytes;
}

}  // namespace

CanonicalForm canonical_form(const AlgebraSig& sig, StructureKind kind) {
  const int n = sig.size;
  // Constants are pinned to the lowest indices (distinct constants only).
  std::vector<Elem> pinned_source;
  for (Elem c : sig.constants)
    if (std::find(pinned_source.begin(), pinned_source.end(), c) ==
        pinned_source.end())
      pinned_source.push_back(c);
  std::vector<Elem> base(n, -1);
  for (size_t k = 0; k < pinned_source.size(); ++k)
    base[pinned_source[k]] = static_cast<Elem>(k);
  std::vector<Elem> free_elems;
  for (Elem x = 0; x < n; ++x)
    if (base[x] < 0) free_elems.push_back(x);

  CanonicalForm out;
  out.kind = kind;
  bool have = false;
  auto consider = [&](const std::vector<Elem>& perm) {
    auto bytes = relabeled_bytes(sig, perm);
    if (!have || bytes < out.bytes) {
      out.bytes = std::move(bytes);
      have = true;
    }
  };

  if (n <= 8) {
    std::vector<Elem> targets;
    for (Elem t = static_cast<Elem>(pinned_source.size()); t < n; ++t)
      targets.push_back(t);
    std::sort(free_elems.begin(), free_elems.end());
    std::vector<Elem> perm = base;
    do {
      for (size_t i = 0; i < free_elems.size(); ++i)
        perm[free_elems[i]] = targets[i];
      consider(perm);
    } while (std::next_permutation(free_elems.begin(), free_elems.end()));
    return out;
  }

  // Invariant-refined search: permute only within color classes.
  auto colors = invariant_colors(sig);
  std::map<int, std::vector<Elem>> classes;
  for (Elem x : free_elems) classes[colors[x]].push_back(x);
  long budget = 1;
  for (auto& [c, elems] : classes) {
    for (size_t i = 2; i <= elems.size(); ++i) {
      budget *= static_cast<long>(i);
      if (budget > 500000)
        throw SizeCapExceeded("canonical form permutation budget exceeded");
    }
  }
  // Assign target ranges class by class (classes keyed by color rank).
  std::vector<std::vector<Elem>> groups;
  for (auto& [c, elems] : classes) groups.push_back(elems);
  std::vector<Elem> perm = base;
  Elem next = static_cast<Elem>(pinned_source.size());
  std::vector<Elem> starts;
  for (auto& g : groups) {
    starts.push_back(next);
    next += static_cast<Elem>(g.size());
  }
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == groups.size()) {
      consider(perm);
      return;
    }
    auto& g = groups[gi];
    std::sort(g.begin(), g.end());
    do {
      for (size_t i = 0; i < g.size(); ++i)
        perm[g[i]] = starts[gi] + static_cast<Elem>(i);
      rec(gi + 1);
    } while (std::next_permutation(g.begin(), g.end()));
  };
  rec(0);
  return out;
}

CanonicalForm canonical_form(const FiniteSemiring& s) {
  return canonical_form(semiring_sig(s), StructureKind::Semiring);
}

CanonicalForm canonical_form(const FiniteSemimodule& m) {
  return canonical_form(module_sig(m), StructureKind::Semimodule);
}

}  // namespace semiring_lab
