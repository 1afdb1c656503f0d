#include "semiring_lab/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace semiring_lab {

namespace {

AlgebraSig monoid_sig(const CommutativeMonoid& m) {
  AlgebraSig sig;
  sig.size = m.size;
  sig.binary = {m.add};
  sig.constants = {0};
  return sig;
}

// Associativity over the defined part of a partially filled commutative
// table; -1 marks unknown entries.
bool partial_associative(const std::vector<Elem>& t, int n) {
  auto get = [&](Elem a, Elem b) { return t[a * n + b]; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = get(a, b);
      if (ab < 0) continue;
      for (Elem c = 0; c < n; ++c) {
        Elem bc = get(b, c);
        if (bc < 0) continue;
        Elem l = get(ab, c), r = get(a, bc);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<CommutativeMonoid> enumerate_commutative_monoids(int n,
                                                             int max_order) {
  if (n < 1 || n > max_order)
    throw SizeCapExceeded("monoid order outside the configured range");
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = a; b < n; ++b) cells.emplace_back(a, b);
  std::vector<Elem> table(static_cast<size_t>(n) * n, -1);
  for (Elem a = 0; a < n; ++a) {
    table[a] = a;  // 0 + a
    table[a * n] = a;
  }
  std::set<std::vector<Elem>> canon;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cells.size()) {
      CommutativeMonoid m{n, table};
      canon.insert(canonical_form(monoid_sig(m), StructureKind::Monoid).bytes);
      return;
    }
    auto [a, b] = cells[k];
    for (Elem v = 0; v < n; ++v) {
      table[a * n + b] = v;
      table[b * n + a] = v;
      // check only triples through the fresh cell; older ones were checked
      if (partial_associative(table, n)) rec(k + 1);
    }
    table[a * n + b] = -1;
    table[b * n + a] = -1;
  };
  rec(0);
  std::vector<CommutativeMonoid> out;
  for (const auto& bytes : canon) {
    CommutativeMonoid m;
    m.size = bytes[0];
    m.add.assign(bytes.begin() + 1, bytes.end());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<SemiringPtr> enumerate_semirings(int n, int max_order) {
  if (n < 1 || n > max_order)
    throw SizeCapExceeded("semiring order outside the configured range");
  auto monoids = enumerate_commutative_monoids(n, n);
  std::set<std::vector<Elem>> canon;
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> reps;
  for (const auto& monoid : monoids) {
    const std::vector<Elem>& add = monoid.add;
    for (Elem one = (n == 1 ? 0 : 1); one < n; ++one) {
      std::vector<Elem> mul(static_cast<size_t>(n) * n, -1);
      for (Elem a = 0; a < n; ++a) {
        mul[a] = 0;  // 0 * a
        mul[a * n] = 0;
        mul[one * n + a] = a;
        mul[a * n + one] = a;
      }
      std::vector<std::pair<Elem, Elem>> cells;
      for (Elem a = 1; a < n; ++a)
        for (Elem b = 1; b < n; ++b)
          if (a != one && b != one) cells.emplace_back(a, b);
      std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
          FiniteSemiring s;
          s.size = n;
          s.add_table = add;
          s.mul_table = mul;
          s.zero = 0;
          s.one = one;
          try {
            check_semiring_axioms(s);
          } catch (const AxiomViolation&) {
            return;
          }
          auto form = canonical_form(s);
          if (canon.insert(form.bytes).second) reps.emplace_back(add, mul);
          return;
        }
        auto [a, b] = cells[k];
        for (Elem v = 0; v < n; ++v) {
          mul[a * n + b] = v;
          bool ok = partial_associative(mul, n);
          // distributivity over the defined part
          for (Elem x = 0; x < n && ok; ++x)
            for (Elem y = 0; y < n && ok; ++y)
              for (Elem z = 0; z < n && ok; ++z) {
                Elem yz = add[y * n + z];
                Elem xy = mul[x * n + y], xz = mul[x * n + z];
                Elem l = mul[x * n + yz];
                if (l >= 0 && xy >= 0 && xz >= 0 && l != add[xy * n + xz])
                  ok = false;
                Elem yx = mul[y * n + x], zx = mul[z * n + x];
                Elem r = mul[yz * n + x];
                if (r >= 0 && yx >= 0 && zx >= 0 && r != add[yx * n + zx])
                  ok = false;
              }
          if (ok) rec(k + 1);
        }
        mul[a * n + b] = -1;
      };
      rec(0);
    }
  }
  // Rebuild in a deterministic order keyed by canonical bytes.
  std::vector<std::pair<std::vector<Elem>, SemiringPtr>> keyed;
  for (auto& [add, mul] : reps) {
    Elem one = -1;
    for (Elem cand = 0; cand < n && one < 0; ++cand) {
      bool unit = true;
      for (Elem a = 0; a < n && unit; ++a)
        unit = mul[cand * n + a] == a && mul[a * n + cand] == a;
      if (unit) one = cand;
    }
    auto s = validate_semiring(n, add, mul, 0, one);
    keyed.emplace_back(canonical_form(*s).bytes, std::move(s));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SemiringPtr> out;
  out.reserve(keyed.size());
  for (auto& [bytes, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace semiring_lab
