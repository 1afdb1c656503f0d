#include "semiring_lab/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace semiring_lab {

namespace {

SemiringPtr from_tables(int size, std::vector<Elem> add, std::vector<Elem> mul,
                        Elem zero, Elem one, std::vector<std::string> labels,
                        std::string name) {
  FiniteSemiring s;
  s.size = size;
  s.add_table = std::move(add);
  s.mul_table = std::move(mul);
  s.zero = zero;
  s.one = one;
  s.labels = std::move(labels);
  s.name = std::move(name);
  return finish_semiring(std::move(s));
}

bool is_ring(const FiniteSemiring& s) {
  for (Elem a = 0; a < s.size; ++a) {
    bool invertible = false;
    for (Elem b = 0; b < s.size && !invertible; ++b)
      invertible = s.add(a, b) == s.zero;
    if (!invertible) return false;
  }
  return true;
}

}  // namespace

SemiringPtr boolean_semifield() {
  return from_tables(2, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1, {"0", "1"}, "B");
}

SemiringPtr chain_semiring_b3() {
  std::vector<Elem> add(9), mul(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      add[a * 3 + b] = std::max(a, b);
      mul[a * 3 + b] = (a == 0 || b == 0) ? 0 : std::max(a, b);
    }
  return from_tables(3, std::move(add), std::move(mul), 0, 1, {"0", "1", "2"},
                     "B3");
}

SemiringPtr truncated_naturals_b31() {
  std::vector<Elem> add(9), mul(9);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) {
      add[a * 3 + b] = std::min(2, a + b);
      mul[a * 3 + b] = std::min(2, a * b);
    }
  return from_tables(3, std::move(add), std::move(mul), 0, 1, {"0", "1", "2"},
                     "B31");
}

SemiringPtr zn(int n) {
  if (n <= 0) throw BadParams("Zn requires n >= 1");
  std::vector<Elem> add(static_cast<size_t>(n) * n),
      mul(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  }
  return from_tables(n, std::move(add), std::move(mul), 0, n == 1 ? 0 : 1,
                     std::move(labels), "Z" + std::to_string(n));
}

SemiringPtr boolean_algebra(int k, int size_cap) {
  if (k < 0) throw BadParams("Bk requires k >= 0");
  if (k >= 30 || (1 << k) > size_cap)
    throw SizeCapExceeded("Boolean algebra exceeds size cap");
  const int n = 1 << k;
  std::vector<Elem> add(static_cast<size_t>(n) * n),
      mul(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    std::string bits;
    for (int i = k - 1; i >= 0; --i) bits += (a >> i & 1) ? '1' : '0';
    labels[a] = k == 0 ? "0" : bits;
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = a | b;
      mul[a * n + b] = a & b;
    }
  }
  return from_tables(n, std::move(add), std::move(mul), 0, n - 1,
                     std::move(labels), "B^" + std::to_string(k));
}

SemiringPtr ext_of_ring(const SemiringPtr& ring) {
  if (!is_ring(*ring))
    throw BadParams("Ext requires a ring (every element additively invertible)");
  const int k = ring->size;
  const int n = k + 2;
  const Elem zero = 0, inf = n - 1;
  auto lift = [&](Elem r) { return r + 1; };  // ring index -> new index
  std::vector<Elem> add(static_cast<size_t>(n) * n),
      mul(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem& sum = add[a * n + b];
      if (a == zero)
        sum = b;
      else if (b == zero)
        sum = a;
      else if (a == inf || b == inf)
        sum = inf;
      else
        sum = lift(ring->add(a - 1, b - 1));
      Elem& prod = mul[a * n + b];
      if (a == zero || b == zero)
        prod = zero;
      else if (a == inf || b == inf)
        prod = inf;
      else
        prod = lift(ring->mul(a - 1, b - 1));
    }
  std::vector<std::string> labels(n);
  labels[zero] = "0";
  labels[inf] = "inf";
  for (Elem r = 0; r < k; ++r)
    labels[lift(r)] = r == ring->zero ? "e" : ring->label(r);
  return from_tables(n, std::move(add), std::move(mul), zero, lift(ring->one),
                     std::move(labels),
                     "Ext(" + (ring->name.empty() ? "R" : ring->name) + ")");
}

std::vector<Elem> matrix_decode(const FiniteSemiring& base, int n, Elem idx) {
  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  for (size_t i = entries.size(); i-- > 0;) {
    entries[i] = idx % base.size;
    idx /= base.size;
  }
  return entries;
}

Elem matrix_encode(const FiniteSemiring& base, int n,
                   const std::vector<Elem>& entries) {
  Elem idx = 0;
  for (size_t i = 0; i < static_cast<size_t>(n) * n; ++i)
    idx = idx * base.size + entries[i];
  return idx;
}

SemiringPtr matrix_semiring(const SemiringPtr& s, int n, int size_cap) {
  if (n <= 0) throw BadParams("matrix dimension must be positive");
  long total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= s->size;
    if (total > size_cap)
      throw SizeCapExceeded("matrix semiring exceeds size cap");
  }
  const int size = static_cast<int>(total);
  FiniteSemiring t;
  t.size = size;
  t.add_table.resize(static_cast<size_t>(size) * size);
  t.mul_table.resize(static_cast<size_t>(size) * size);
  t.labels.resize(size);
  std::vector<std::vector<Elem>> mats(size);
  for (Elem x = 0; x < size; ++x) {
    mats[x] = matrix_decode(*s, n, x);
    std::string label = "[";
    for (int i = 0; i < n; ++i) {
      if (i) label += ";";
      for (int j = 0; j < n; ++j) {
        if (j) label += ",";
        label += s->label(mats[x][i * n + j]);
      }
    }
    t.labels[x] = label + "]";
  }
  std::vector<Elem> scratch(static_cast<size_t>(n) * n);
  for (Elem x = 0; x < size; ++x) {
    const auto& a = mats[x];
    for (Elem y = 0; y < size; ++y) {
      const auto& b = mats[y];
      for (int i = 0; i < n * n; ++i) scratch[i] = s->add(a[i], b[i]);
      t.add_table[x * size + y] = matrix_encode(*s, n, scratch);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Elem acc = s->zero;
          for (int k = 0; k < n; ++k)
            acc = s->add(acc, s->mul(a[i * n + k], b[k * n + j]));
          scratch[i * n + j] = acc;
        }
      t.mul_table[x * size + y] = matrix_encode(*s, n, scratch);
    }
  }
  std::vector<Elem> id(static_cast<size_t>(n) * n, s->zero);
  for (int i = 0; i < n; ++i) id[i * n + i] = s->one;
  t.zero = matrix_encode(*s, n, std::vector<Elem>(n * n, s->zero));
  t.one = matrix_encode(*s, n, id);
  t.name = "M" + std::to_string(n) + "(" + (s->name.empty() ? "S" : s->name) +
           ")";
  return finish_semiring(std::move(t));
}

SemiringPtr direct_sum(const SemiringPtr& a, const SemiringPtr& b,
                       int size_cap) {
  long total = static_cast<long>(a->size) * b->size;
  if (total > size_cap) throw SizeCapExceeded("direct sum exceeds size cap");
  const int size = static_cast<int>(total);
  FiniteSemiring t;
  t.size = size;
  t.add_table.resize(static_cast<size_t>(size) * size);
  t.mul_table.resize(static_cast<size_t>(size) * size);
  t.labels.resize(size);
  auto enc = [&](Elem x, Elem y) { return x * b->size + y; };
  for (Elem x1 = 0; x1 < a->size; ++x1)
    for (Elem y1 = 0; y1 < b->size; ++y1) {
      Elem p = enc(x1, y1);
      t.labels[p] = "(" + a->label(x1) + "," + b->label(y1) + ")";
      for (Elem x2 = 0; x2 < a->size; ++x2)
        for (Elem y2 = 0; y2 < b->size; ++y2) {
          Elem q = enc(x2, y2);
          t.add_table[p * size + q] = enc(a->add(x1, x2), b->add(y1, y2));
          t.mul_table[p * size + q] = enc(a->mul(x1, x2), b->mul(y1, y2));
        }
    }
  t.zero = enc(a->zero, b->zero);
  t.one = enc(a->one, b->one);
  t.name = "(" + (a->name.empty() ? "S1" : a->name) + ")+(" +
           (b->name.empty() ? "S2" : b->name) + ")";
  return finish_semiring(std::move(t));
}

SemiringPtr corner_semiring(const SemiringPtr& s, Elem e) {
  if (e < 0 || e >= s->size) throw BadParams("corner element out of range");
  if (s->mul(e, e) != e)
    throw NotIdempotent("corner requires a multiplicative idempotent");
  if (e == s->zero) throw ZeroIdempotent("corner of the zero idempotent");
  std::vector<bool> in(s->size, false);
  for (Elem x = 0; x < s->size; ++x) in[s->mul(e, s->mul(x, e))] = true;
  std::vector<Elem> elems;
  std::vector<Elem> index_of(s->size, -1);
  for (Elem x = 0; x < s->size; ++x)
    if (in[x]) {
      index_of[x] = static_cast<Elem>(elems.size());
      elems.push_back(x);
    }
  const int size = static_cast<int>(elems.size());
  FiniteSemiring t;
  t.size = size;
  t.add_table.resize(static_cast<size_t>(size) * size);
  t.mul_table.resize(static_cast<size_t>(size) * size);
  t.labels.resize(size);
  for (int i = 0; i < size; ++i) {
    t.labels[i] = s->label(elems[i]);
    for (int j = 0; j < size; ++j) {
      t.add_table[i * size + j] = index_of[s->add(elems[i], elems[j])];
      t.mul_table[i * size + j] = index_of[s->mul(elems[i], elems[j])];
    }
  }
  t.zero = index_of[s->zero];
  t.one = index_of[e];
  t.name = (s->name.empty() ? "S" : s->name) + " corner";
  return finish_semiring(std::move(t));
}

std::vector<std::string> catalog_ids() {
  return {"trivial", "B", "B3", "B31", "Zn", "Bk", "Ext", "Mat", "MatB",
          "Sum"};
}

namespace {

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw BadParams(std::string("bad ") + what);
    return v;
  } catch (const BadParams&) {
    throw;
  } catch (...) {
    throw BadParams(std::string("bad ") + what + ": " + tok);
  }
}

SemiringPtr construct_impl(const std::vector<std::string>& tokens, size_t& pos,
                           int size_cap) {
  if (pos >= tokens.size()) throw BadParams("missing catalog id");
  const std::string id = tokens[pos++];
  if (id == "trivial" || id == "Z1") return zn(1);
  if (id == "B") return boolean_semifield();
  if (id == "B3") return chain_semiring_b3();
  if (id == "B31") return truncated_naturals_b31();
  if (id == "Zn") {
    if (pos >= tokens.size()) throw BadParams("Zn needs an order");
    return zn(parse_int(tokens[pos++], "Zn order"));
  }
  if (id.size() > 1 && id[0] == 'Z' &&
      std::all_of(id.begin() + 1, id.end(), ::isdigit))
    return zn(parse_int(id.substr(1), "Zn order"));
  if (id == "Bk") {
    if (pos >= tokens.size()) throw BadParams("Bk needs an exponent");
    return boolean_algebra(parse_int(tokens[pos++], "Bk exponent"), size_cap);
  }
  if (id == "Ext") {
    SemiringPtr ring = construct_impl(tokens, pos, size_cap);
    return ext_of_ring(ring);
  }
  if (id == "MatB") {
    if (pos >= tokens.size()) throw BadParams("MatB needs a dimension");
    return matrix_semiring(boolean_semifield(),
                           parse_int(tokens[pos++], "matrix dimension"),
                           size_cap);
  }
  if (id == "Mat") {
    SemiringPtr base = construct_impl(tokens, pos, size_cap);
    if (pos >= tokens.size()) throw BadParams("Mat needs a dimension");
    return matrix_semiring(base, parse_int(tokens[pos++], "matrix dimension"),
                           size_cap);
  }
  if (id == "Sum") {
    SemiringPtr a = construct_impl(tokens, pos, size_cap);
    SemiringPtr b = construct_impl(tokens, pos, size_cap);
    return direct_sum(a, b, size_cap);
  }
  throw BadParams("unknown catalog id: " + id);
}

}  // namespace

SemiringPtr construct(const std::vector<std::string>& tokens, int size_cap) {
  size_t pos = 0;
  SemiringPtr s = construct_impl(tokens, pos, size_cap);
  if (pos != tokens.size()) throw BadParams("trailing construct parameters");
  return s;
}

SemiringPtr construct(const std::string& spec, int size_cap) {
  std::istringstream in(spec);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return construct(tokens, size_cap);
}

}  // namespace semiring_lab
