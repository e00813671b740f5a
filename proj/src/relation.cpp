#include "semicong/relation.hpp"

#include "semicong/errors.hpp"

namespace semicong {

Relation Relation::identity(int n) {
  Relation r(n);
  for (int i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

Relation Relation::full(int n) {
  Relation r(n);
  r.bits.assign(static_cast<std::size_t>(n) * n, true);
  return r;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (contains(a, b)) out.push_back({a, b});
  return out;
}

std::size_t Relation::size() const {
  std::size_t c = 0;
  for (bool b : bits) c += b;
  return c;
}

bool Relation::subset_of(const Relation& o) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] && !o.bits[i]) return false;
  return true;
}

namespace {
void check_same(const Relation& r, const Relation& s) {
  if (r.n != s.n) throw DomainError("relation carrier mismatch");
}
}  // namespace

Relation relation_union(const Relation& r, const Relation& s) {
  check_same(r, s);
  Relation out(r.n);
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = r.bits[i] || s.bits[i];
  return out;
}

Relation relation_intersection(const Relation& r, const Relation& s) {
  check_same(r, s);
  Relation out(r.n);
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] = r.bits[i] && s.bits[i];
  return out;
}

Relation compose(const Relation& r, const Relation& s) {
  check_same(r, s);
  Relation out(r.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.contains(a, b)) continue;
      for (int c = 0; c < r.n; ++c)
        if (s.contains(b, c)) out.insert(a, c);
    }
  return out;
}

Relation inverse(const Relation& r) {
  Relation out(r.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      if (r.contains(a, b)) out.insert(b, a);
  return out;
}

Relation transitive_closure(const Relation& r) {
  Relation out = r;
  for (int k = 0; k < r.n; ++k)
    for (int a = 0; a < r.n; ++a) {
      if (!out.contains(a, k)) continue;
      for (int b = 0; b < r.n; ++b)
        if (out.contains(k, b)) out.insert(a, b);
    }
  return out;
}

Relation equivalence_closure(const Relation& r) {
  return transitive_closure(relation_union(relation_union(r, inverse(r)), Relation::identity(r.n)));
}

bool is_equivalence(const Relation& r) {
  for (int a = 0; a < r.n; ++a)
    if (!r.contains(a, a)) return false;
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      if (r.contains(a, b) && !r.contains(b, a)) return false;
  return r == transitive_closure(r);
}

Relation translate_saturate(const Semiring& s, const Relation& r) {
  if (r.n != s.n) throw DomainError("relation carrier mismatch");
  Relation out(r.n);
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b) {
      if (!r.contains(a, b)) continue;
      for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
          out.insert(s.add(s.mul(a, x), y), s.add(s.mul(b, x), y));
    }
  return out;
}

Relation plus_saturate(const Semiring& s, const Relation& r) {
  if (r.n != s.n) throw DomainError("relation carrier mismatch");
  Relation out(r.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      for (int c = 0; c < s.n; ++c)
        if (r.contains(s.add(a, c), s.add(b, c))) {
          out.insert(a, b);
          break;
        }
  return out;
}

Relation principal_relation(const Semiring& s, int a, int b) {
  Relation out(s.n);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z)
        out.insert(s.add(s.add(s.mul(a, x), s.mul(b, y)), z),
                   s.add(s.add(s.mul(b, x), s.mul(a, y)), z));
  return out;
}

}  // namespace semicong
