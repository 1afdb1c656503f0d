#include "semiring_lab/simpleness.hpp"

#include <algorithm>
#include <set>

namespace semiring_lab {

namespace {

bool is_ideal(const FiniteSemiring& s, const std::vector<bool>& set,
              IdealSide side) {
  if (!set[s.zero]) return false;
  for (Elem a = 0; a < s.size; ++a) {
    if (!set[a]) continue;
    for (Elem b = a; b < s.size; ++b)
      if (set[b] && !set[s.add(a, b)]) return false;
    for (Elem x = 0; x < s.size; ++x) {
      if (side != IdealSide::Left && !set[s.mul(a, x)]) return false;
      if (side != IdealSide::Right && !set[s.mul(x, a)]) return false;
    }
  }
  return true;
}

std::vector<bool> ideal_closure(const FiniteSemiring& s, std::vector<bool> set,
                                IdealSide side) {
  set[s.zero] = true;
  std::vector<Elem> members;
  for (Elem a = 0; a < s.size; ++a)
    if (set[a]) members.push_back(a);
  auto absorb = [&](Elem x) {
    if (!set[x]) {
      set[x] = true;
      members.push_back(x);
    }
  };
  for (size_t i = 0; i < members.size(); ++i) {
    Elem a = members[i];
    for (size_t j = 0; j <= i; ++j) absorb(s.add(a, members[j]));
    for (Elem x = 0; x < s.size; ++x) {
      if (side != IdealSide::Left) absorb(s.mul(a, x));
      if (side != IdealSide::Right) absorb(s.mul(x, a));
    }
  }
  return set;
}

}  // namespace

IdealSet ideals(const SemiringPtr& s, IdealSide side, IdealStrategy strategy) {
  IdealSet out;
  out.side = side;
  std::vector<std::vector<bool>> found;
  bool scan = strategy == IdealStrategy::SubsetScan ||
              (strategy == IdealStrategy::Auto && s->size <= 20);
  if (scan && s->size > 25)
    throw SizeCapExceeded("subset scan beyond 25 elements");
  if (scan) {
    const unsigned long total = 1ul << s->size;
    for (unsigned long bits = 0; bits < total; ++bits) {
      if (!(bits >> s->zero & 1ul)) continue;
      std::vector<bool> set(s->size);
      for (Elem a = 0; a < s->size; ++a) set[a] = (bits >> a) & 1ul;
      if (is_ideal(*s, set, side)) found.push_back(std::move(set));
    }
  } else {
    std::set<std::vector<bool>> seen;
    std::vector<bool> zero_only(s->size, false);
    zero_only[s->zero] = true;
    found.push_back(zero_only);
    seen.insert(zero_only);
    for (Elem a = 0; a < s->size; ++a) {
      std::vector<bool> seed(s->size, false);
      seed[a] = true;
      auto p = ideal_closure(*s, std::move(seed), side);
      if (seen.insert(p).second) found.push_back(std::move(p));
    }
    for (size_t i = 0; i < found.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        std::vector<bool> u(s->size);
        for (Elem a = 0; a < s->size; ++a) u[a] = found[i][a] || found[j][a];
        u = ideal_closure(*s, std::move(u), side);
        if (seen.insert(u).second) found.push_back(std::move(u));
      }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<bool>& a, const std::vector<bool>& b) {
              auto ca = std::count(a.begin(), a.end(), true);
              auto cb = std::count(b.begin(), b.end(), true);
              if (ca != cb) return ca < cb;
              return a < b;
            });
  out.ideals.reserve(found.size());
  for (auto& f : found) out.ideals.push_back(ElementSubset{std::move(f)});
  return out;
}

bool is_ideal_simple(const SemiringPtr& s) {
  if (s->size <= 1) return false;  // degenerate by convention
  return ideals(s, IdealSide::TwoSided).ideals.size() == 2;
}

bool is_congruence_simple(const SemiringPtr& s, long cap) {
  if (s->size <= 1) return false;  // degenerate by convention
  auto set = all_congruences(*s, CongruenceKind::Semiring, cap);
  if (!set.complete) throw CongruenceLimitExceeded(cap);
  return set.congruences.size() == 2;
}

bool is_simple(const SemiringPtr& s, long cap) {
  return is_congruence_simple(s, cap) && is_ideal_simple(s);
}

}  // namespace semiring_lab
