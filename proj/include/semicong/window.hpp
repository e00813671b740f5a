#ifndef SEMICONG_WINDOW_HPP
#define SEMICONG_WINDOW_HPP

#include <cstdint>
#include <vector>

#include "semicong/geometry.hpp"
#include "semicong/polynomial.hpp"

namespace semicong {
namespace window {

/// Bounded-window treatment of the natural numbers: exact arithmetic on the
/// pseudo-carrier {0..N} with the mod-p congruence, used for membership
/// style checks only. Claims are "verified for all values <= N"; nothing
/// here enumerates an infinite carrier.
struct Context {
  std::uint64_t modulus = 0;  // p of the mod-p congruence
  std::uint64_t bound = 50;   // N
};

// Exact natural-number evaluation; coefficients of f are literal naturals.
std::uint64_t eval_nat(const Polynomial& f, std::span<const std::uint64_t> point);

// Z_rho(T) intersected with the window, by exhaustive evaluation of the
// points 0..N (arity 1) or tuples over {0..N} (small arities).
std::vector<std::vector<std::uint64_t>> zero_set(const Context& w, const PairSystem& t);

// Membership of a pair in (sqrt rho)_A(Z): values congruent mod p at every
// window zero-set point. sqrt(mod p) = mod p, computed exactly through the
// zmod-p table (the quantifiers over translates and powers reduce mod p).
bool vanishing_contains(const Context& w, const PairSystem& t, const PolyPair& pair);

// The Nullstellensatz instance for the single-generator system T = {(x1, 0)}
// over the naturals: enumerates capped pairs, decides sqrt(sigma/rho)
// membership by explicit witness construction through the principal
// relation of (x1, 0), and compares against the vanishing side.
NullstellensatzReport nullstellensatz_check(const Context& w, const PairSystem& t,
                                            int degree_cap, int coeff_cap);

// Thm-3.12 style counting in the window: zero-set points mod p versus
// assignments over Z_p satisfying T there.
HomCountReport hom_count(const Context& w, const PairSystem& t);

}  // namespace window
}  // namespace semicong

#endif
