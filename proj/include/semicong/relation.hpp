#ifndef SEMICONG_RELATION_HPP
#define SEMICONG_RELATION_HPP

#include <vector>

#include "semicong/semiring.hpp"
#include "semicong/twisted.hpp"

namespace semicong {

/// A binary relation on the carrier 0..n-1, stored as an n*n bit matrix.
struct Relation {
  int n = 0;
  std::vector<bool> bits;  // row-major, bits[a*n+b]

  Relation() = default;
  explicit Relation(int n_) : n(n_), bits(static_cast<std::size_t>(n_) * n_, false) {}

  static Relation empty(int n) { return Relation(n); }
  static Relation identity(int n);
  static Relation full(int n);

  bool contains(int a, int b) const { return bits[static_cast<std::size_t>(a) * n + b]; }
  void insert(int a, int b) { bits[static_cast<std::size_t>(a) * n + b] = true; }

  std::vector<Pair> pairs() const;  // row-major order, i.e. sorted
  std::size_t size() const;
  bool subset_of(const Relation& o) const;
  bool operator==(const Relation&) const = default;
};

Relation relation_union(const Relation& r, const Relation& s);
Relation relation_intersection(const Relation& r, const Relation& s);
Relation compose(const Relation& r, const Relation& s);  // R o S
Relation inverse(const Relation& r);
Relation transitive_closure(const Relation& r);  // R^inf
// Smallest equivalence containing R: (R u R^-1 u id)^inf.
Relation equivalence_closure(const Relation& r);
bool is_equivalence(const Relation& r);

// R^L = {(ax+y, bx+y) : (a,b) in R, x,y in A}.
Relation translate_saturate(const Semiring& a, const Relation& r);

// R_+ = {(a,b) : (a+c, b+c) in R for some c}.
Relation plus_saturate(const Semiring& a, const Relation& r);

// R(a,b) = {(ax+by+z, bx+ay+z) : x,y,z in A}.
Relation principal_relation(const Semiring& s, int a, int b);

}  // namespace semicong

#endif
