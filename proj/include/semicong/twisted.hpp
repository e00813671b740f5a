#ifndef SEMICONG_TWISTED_HPP
#define SEMICONG_TWISTED_HPP

#include <compare>

#include "semicong/semiring.hpp"

namespace semicong {

struct Pair {
  int a = 0;
  int b = 0;
  auto operator<=>(const Pair&) const = default;
};

inline int pair_id(const Semiring& s, Pair p) { return p.a * s.n + p.b; }
inline Pair pair_from_id(const Semiring& s, int id) { return {id / s.n, id % s.n}; }

// (a,b) * (c,d) = (ac+bd, ad+bc).
Pair twisted_mul(const Semiring& s, Pair p, Pair q);

// Iterated twisted product; n = 0 gives the unit (one, zero).
Pair twisted_pow(const Semiring& s, Pair p, int n);

// Binomial closed form of the n-th twisted power: even-index terms collect on
// the left, odd-index terms on the right, with binomial coefficients acting
// as repeated addition of one. Must agree with twisted_pow.
Pair twisted_pow_binomial(const Semiring& s, Pair p, int n);

}  // namespace semicong

#endif
