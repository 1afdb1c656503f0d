#include "semiring_lab/semiring.hpp"

#include <algorithm>

namespace semiring_lab {

bool same_semiring(const FiniteSemiring& a, const FiniteSemiring& b) {
  return a.size == b.size && a.zero == b.zero && a.one == b.one &&
         a.add_table == b.add_table && a.mul_table == b.mul_table;
}

namespace {

void check_shape(const FiniteSemiring& s) {
  if (s.size <= 0) throw ShapeError("carrier size must be positive");
  const auto n = static_cast<size_t>(s.size);
  if (s.add_table.size() != n * n) throw ShapeError("add table is not size*size");
  if (s.mul_table.size() != n * n) throw ShapeError("mul table is not size*size");
  for (Elem v : s.add_table)
    if (v < 0 || v >= s.size) throw ShapeError("add entry out of range");
  for (Elem v : s.mul_table)
    if (v < 0 || v >= s.size) throw ShapeError("mul entry out of range");
  if (s.zero < 0 || s.zero >= s.size) throw ShapeError("zero out of range");
  if (s.one < 0 || s.one >= s.size) throw ShapeError("one out of range");
  if (!s.labels.empty() && s.labels.size() != n)
    throw ShapeError("labels length differs from carrier size");
}

}  // namespace

void check_semiring_axioms(const FiniteSemiring& s) {
  check_shape(s);
  const int n = s.size;
  if (n > 1 && s.zero == s.one)
    throw AxiomViolation("zero equals one in a nontrivial semiring", {});
  for (Elem a = 0; a < n; ++a) {
    if (s.add(s.zero, a) != a || s.add(a, s.zero) != a)
      throw AxiomViolation("additive identity", {a});
    if (s.mul(s.one, a) != a || s.mul(a, s.one) != a)
      throw AxiomViolation("multiplicative identity", {a});
    if (s.mul(s.zero, a) != s.zero || s.mul(a, s.zero) != s.zero)
      throw AxiomViolation("zero is absorbing", {a});
    for (Elem b = 0; b < n; ++b) {
      if (s.add(a, b) != s.add(b, a))
        throw AxiomViolation("addition commutativity", {a, b});
      for (Elem c = 0; c < n; ++c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c)))
          throw AxiomViolation("addition associativity", {a, b, c});
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
          throw AxiomViolation("multiplication associativity", {a, b, c});
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
          throw AxiomViolation("left distributivity", {a, b, c});
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)))
          throw AxiomViolation("right distributivity", {a, b, c});
      }
    }
  }
}

namespace {

SemiringPtr seal(FiniteSemiring&& s) {
  if (s.labels.empty()) {
    s.labels.resize(s.size);
    for (Elem a = 0; a < s.size; ++a) s.labels[a] = std::to_string(a);
  }
  return std::make_shared<const FiniteSemiring>(std::move(s));
}

}  // namespace

SemiringPtr validate_semiring(int size, std::vector<Elem> add,
                              std::vector<Elem> mul, Elem zero, Elem one,
                              std::vector<std::string> labels,
                              std::string name) {
  FiniteSemiring s;
  s.size = size;
  s.add_table = std::move(add);
  s.mul_table = std::move(mul);
  s.zero = zero;
  s.one = one;
  s.labels = std::move(labels);
  s.name = std::move(name);
  check_semiring_axioms(s);
  return seal(std::move(s));
}

SemiringPtr finish_semiring(FiniteSemiring s) {
  if (s.size <= kRecheckLimit) {
    check_semiring_axioms(s);
  } else {
    check_shape(s);
  }
  return seal(std::move(s));
}

SemiringPtr opposite(const SemiringPtr& s) {
  FiniteSemiring t = *s;
  for (Elem a = 0; a < s->size; ++a)
    for (Elem b = 0; b < s->size; ++b)
      t.mul_table[a * s->size + b] = s->mul(b, a);
  t.name = s->name.empty() ? "" : s->name + "^op";
  return finish_semiring(std::move(t));
}

Elem multiple_of_one(const FiniteSemiring& s, int n) {
  return multiple(s, s.one, n);
}

Elem multiple(const FiniteSemiring& s, Elem a, int n) {
  Elem acc = s.zero;
  for (int i = 0; i < n; ++i) acc = s.add(acc, a);
  return acc;
}

}  // namespace semiring_lab
