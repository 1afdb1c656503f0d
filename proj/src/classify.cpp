#include "semiring_lab/classify.hpp"

#include <algorithm>

namespace semiring_lab {

using nlohmann::json;

int ElementSubset::count() const {
  return static_cast<int>(std::count(members.begin(), members.end(), true));
}

std::vector<Elem> ElementSubset::elements() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < static_cast<Elem>(members.size()); ++a)
    if (members[a]) out.push_back(a);
  return out;
}

namespace {

// I+ / Z / V via the defining scans, on any additive structure.
template <typename Add>
std::vector<bool> additive_subset(int size, Elem zero, Add add,
                                  SubsetKind which) {
  std::vector<bool> members(size, false);
  switch (which) {
    case SubsetKind::AddIdempotents:
      for (Elem a = 0; a < size; ++a) members[a] = add(a, a) == a;
      break;
    case SubsetKind::Zeroids:
      for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size && !members[a]; ++b)
          members[a] = add(a, b) == b;
      break;
    case SubsetKind::AddInvertible:
      for (Elem a = 0; a < size; ++a)
        for (Elem b = 0; b < size && !members[a]; ++b)
          members[a] = add(a, b) == zero;
      break;
    case SubsetKind::MulIdempotents:
      throw KindMismatch("multiplicative idempotents need a semiring");
  }
  return members;
}

void require_ideal(const FiniteSemiring& s, const std::vector<bool>& members,
                   const char* which) {
  for (Elem a = 0; a < s.size; ++a) {
    if (!members[a]) continue;
    for (Elem b = 0; b < s.size; ++b) {
      if (members[b] && !members[s.add(a, b)])
        throw std::logic_error(std::string(which) +
                               " not closed under addition");
      if (!members[s.mul(a, b)] || !members[s.mul(b, a)])
        throw std::logic_error(std::string(which) + " not a two-sided ideal");
    }
  }
}

void require_subsemimodule(const FiniteSemimodule& m,
                           const std::vector<bool>& members,
                           const char* which) {
  if (!is_subsemimodule(m, members))
    throw std::logic_error(std::string(which) + " not a subsemimodule");
}

}  // namespace

ElementSubset distinguished_subset(const FiniteSemiring& s, SubsetKind which) {
  ElementSubset out;
  if (which == SubsetKind::MulIdempotents) {
    out.members.resize(s.size);
    for (Elem a = 0; a < s.size; ++a) out.members[a] = s.mul(a, a) == a;
    return out;
  }
  out.members = additive_subset(
      s.size, s.zero, [&](Elem a, Elem b) { return s.add(a, b); }, which);
  require_ideal(s, out.members, "distinguished subset");
  return out;
}

ElementSubset distinguished_subset(const FiniteSemimodule& m,
                                   SubsetKind which) {
  if (which == SubsetKind::MulIdempotents)
    throw KindMismatch("multiplicative idempotents need a semiring");
  ElementSubset out;
  out.members = additive_subset(
      m.size, m.zero, [&](Elem a, Elem b) { return m.add(a, b); }, which);
  require_subsemimodule(m, out.members, "distinguished subset");
  return out;
}

bool is_ring(const FiniteSemiring& s) {
  auto v = additive_subset(
      s.size, s.zero, [&](Elem a, Elem b) { return s.add(a, b); },
      SubsetKind::AddInvertible);
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

bool is_subtractive(const FiniteSemimodule& m, const std::vector<bool>& set,
                    std::pair<Elem, Elem>* witness) {
  for (Elem a = 0; a < m.size; ++a) {
    if (!set[a]) continue;
    for (Elem b = 0; b < m.size; ++b)
      if (!set[b] && set[m.add(a, b)]) {
        if (witness) *witness = {a, b};
        return false;
      }
  }
  return true;
}

namespace {

PropertyFlag flag_zeroic(const FiniteSemiring& s) {
  json mates = json::array();
  for (Elem z = 0; z < s.size; ++z) {
    Elem mate = -1;
    for (Elem m = 0; m < s.size && mate < 0; ++m)
      if (s.add(z, m) == m) mate = m;
    if (mate < 0) return {false, json{{"element", z}}};
    mates.push_back(mate);
  }
  return {true, json{{"absorbing_mates", mates}}};
}

PropertyFlag flag_zerosumfree(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size; ++a)
    for (Elem b = 0; b < s.size; ++b)
      if (s.add(a, b) == s.zero && a != s.zero)
        return {false, json{{"a", a}, {"b", b}}};
  return {true, json::object()};
}

PropertyFlag flag_add_idempotent(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size; ++a)
    if (s.add(a, a) != a) return {false, json{{"element", a}}};
  return {true, json::object()};
}

PropertyFlag flag_pi_regular(const FiniteSemiring& s) {
  // The additive orbit of 1 revisits a value within |S| steps, so testing
  // n = 1..|S| is exhaustive.
  Elem n1 = s.zero;
  for (int n = 1; n <= s.size; ++n) {
    n1 = s.add(n1, s.one);
    for (Elem y = 0; y < s.size; ++y)
      if (s.add(s.add(n1, y), n1) == n1)
        return {true, json{{"n", n}, {"y", y}}};
  }
  return {false, json::object()};
}

PropertyFlag flag_gelfand(const FiniteSemiring& s, bool right) {
  json inverses = json::array();
  for (Elem x = 0; x < s.size; ++x) {
    Elem u = s.add(s.one, x);
    Elem inv = -1;
    for (Elem t = 0; t < s.size && inv < 0; ++t)
      if ((right ? s.mul(u, t) : s.mul(t, u)) == s.one) inv = t;
    if (inv < 0) return {false, json{{"s", x}}};
    inverses.push_back(inv);
  }
  return {true, json{{"inverses", inverses}}};
}

PropertyFlag flag_anti_bounded(const FiniteSemiring& s,
                               const std::vector<bool>& add_invertible) {
  std::vector<bool> covered = add_invertible;
  for (Elem x = 0; x < s.size; ++x) covered[s.add(s.one, x)] = true;
  for (Elem a = 0; a < s.size; ++a)
    if (!covered[a]) return {false, json{{"element", a}}};
  return {true, json::object()};
}

PropertyFlag flag_entire(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size; ++a)
    for (Elem b = 0; b < s.size; ++b)
      if (a != s.zero && b != s.zero && s.mul(a, b) == s.zero)
        return {false, json{{"a", a}, {"b", b}}};
  return {true, json::object()};
}

PropertyFlag flag_boolean_algebra(const FiniteSemiring& s) {
  auto fail = [&](const char* law, std::initializer_list<Elem> w) {
    return PropertyFlag{false, json{{"law", law}, {"witness", w}}};
  };
  for (Elem a = 0; a < s.size; ++a) {
    if (s.add(a, a) != a) return fail("additive idempotency", {a});
    if (s.mul(a, a) != a) return fail("multiplicative idempotency", {a});
    for (Elem b = 0; b < s.size; ++b) {
      if (s.mul(a, b) != s.mul(b, a)) return fail("commutativity", {a, b});
      if (s.add(a, s.mul(a, b)) != a) return fail("absorption a+ab=a", {a, b});
      if (s.mul(a, s.add(a, b)) != a)
        return fail("absorption a(a+b)=a", {a, b});
      for (Elem c = 0; c < s.size; ++c)
        if (s.add(a, s.mul(b, c)) != s.mul(s.add(a, b), s.add(a, c)))
          return fail("distributivity of join over meet", {a, b, c});
    }
  }
  json complements = json::array();
  for (Elem a = 0; a < s.size; ++a) {
    Elem comp = -1;
    for (Elem b = 0; b < s.size && comp < 0; ++b)
      if (s.add(a, b) == s.one && s.mul(a, b) == s.zero) comp = b;
    if (comp < 0) return fail("complement", {a});
    complements.push_back(comp);
  }
  return {true, json{{"complements", complements}}};
}

PropertyFlag flag_subtractive(const FiniteSemimodule& reg) {
  for (const auto& sub : subsemimodules(reg)) {
    std::pair<Elem, Elem> w;
    if (!is_subtractive(reg, sub, &w)) {
      json set = json::array();
      for (Elem a = 0; a < reg.size; ++a)
        if (sub[a]) set.push_back(a);
      return {false, json{{"K", set}, {"m", w.first}, {"m_prime", w.second}}};
    }
  }
  return {true, json::object()};
}

}  // namespace

PropertyReport classify(const SemiringPtr& s) {
  PropertyReport r;
  r.zeroic = flag_zeroic(*s);
  r.zerosumfree = flag_zerosumfree(*s);
  r.additively_idempotent = flag_add_idempotent(*s);
  r.additively_pi_regular = flag_pi_regular(*s);
  r.gelfand_right = flag_gelfand(*s, true);
  r.gelfand_left = flag_gelfand(*s, false);
  auto v = distinguished_subset(*s, SubsetKind::AddInvertible);
  r.anti_bounded = flag_anti_bounded(*s, v.members);
  r.entire = flag_entire(*s);
  if (v.count() == s->size) {
    r.ring = {true, json::object()};
  } else {
    Elem missing = 0;
    while (v.members[missing]) ++missing;
    r.ring = {false, json{{"element", missing}}};
  }
  r.finite_boolean_algebra = flag_boolean_algebra(*s);
  r.right_subtractive = flag_subtractive(*regular_semimodule(s));
  r.left_subtractive = flag_subtractive(*regular_semimodule(opposite(s)));
  return r;
}

json PropertyReport::to_json() const {
  auto put = [](const PropertyFlag& f) {
    return json{{"value", f.value}, {"witness", f.witness}};
  };
  return json{{"zeroic", put(zeroic)},
              {"zerosumfree", put(zerosumfree)},
              {"additively_idempotent", put(additively_idempotent)},
              {"additively_pi_regular", put(additively_pi_regular)},
              {"gelfand_right", put(gelfand_right)},
              {"gelfand_left", put(gelfand_left)},
              {"anti_bounded", put(anti_bounded)},
              {"entire", put(entire)},
              {"ring", put(ring)},
              {"finite_boolean_algebra", put(finite_boolean_algebra)},
              {"right_subtractive", put(right_subtractive)},
              {"left_subtractive", put(left_subtractive)}};
}

bool PropertyReport::flag(const std::string& name) const {
  if (name == "zeroic") return zeroic.value;
  if (name == "zerosumfree") return zerosumfree.value;
  if (name == "additively_idempotent") return additively_idempotent.value;
  if (name == "additively_pi_regular") return additively_pi_regular.value;
  if (name == "gelfand_right") return gelfand_right.value;
  if (name == "gelfand_left") return gelfand_left.value;
  if (name == "anti_bounded") return anti_bounded.value;
  if (name == "entire") return entire.value;
  if (name == "ring") return ring.value;
  if (name == "finite_boolean_algebra") return finite_boolean_algebra.value;
  if (name == "right_subtractive") return right_subtractive.value;
  if (name == "left_subtractive") return left_subtractive.value;
  throw BadParams("unknown property flag: " + name);
}

}  // namespace semiring_lab
