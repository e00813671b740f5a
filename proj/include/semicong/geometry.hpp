#ifndef SEMICONG_GEOMETRY_HPP
#define SEMICONG_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "semicong/function_semiring.hpp"
#include "semicong/polynomial.hpp"

namespace semicong {

/// A finite system of polynomial pair equations over the coefficient
/// semiring; the "f = g rel rho" constraints of a zero-set query.
struct PairSystem {
  int arity = 0;
  std::vector<PolyPair> pairs;
};

PairSystem make_pair_system(int arity, std::vector<PolyPair> pairs);

/// A subset of B^n stored as sorted point ranks (coordinate 0 varies
/// fastest in the rank encoding).
struct Variety {
  int arity = 0;
  int base = 0;  // |B|
  std::vector<int> points;

  long long space_size() const;
  bool contains(int rank) const;
  bool operator==(const Variety&) const = default;
};

Variety variety_from_points(int arity, int base, std::vector<int> points);
Variety variety_union(const Variety& a, const Variety& b);
Variety variety_intersection(const Variety& a, const Variety& b);
bool variety_subset(const Variety& a, const Variety& b);

// Z_rho(T)(B): exhaustive evaluation over B^n.
Variety zero_set(const EmbeddedSemiring& ctx, const PairSystem& t, const Congruence& rho,
                 const FunctionLimits& limits = {});

// Z of the congruence generated by T on the function semiring. Must equal
// zero_set(T) (a test obligation mirroring the generated-system identity).
Variety zero_set_of_generated(const FunctionSemiring& fs, const PairSystem& t,
                              const Congruence& rho);

// T1 * T2 = all pairwise twisted products.
PairSystem star_product(const Semiring& a, const PairSystem& t1, const PairSystem& t2);

struct StarUnionReport {
  Variety z1, z2, z_star;
  bool rho_prime = false;
  bool equal = false;  // z_star == z1 u z2 (guaranteed for prime rho)
};
StarUnionReport star_union(const EmbeddedSemiring& ctx, const PairSystem& t1,
                           const PairSystem& t2, const Congruence& rho,
                           const FunctionLimits& limits = {});

/// rho_B(Y): polynomial pairs whose values lie in rho at every point of Y.
/// Materialized on the function semiring as the partition of functions by
/// their rho-class signature over Y; the syntactic predicate answers for
/// arbitrary polynomials through their induced tables.
struct VanishingCongruence {
  EmbeddedSemiring ctx;
  int arity = 0;
  Congruence rho;
  std::vector<int> y_points;
  std::vector<int> function_class;  // per function id of the source closure
  int num_function_classes = 0;
  long long num_functions = 0;

  bool contains(const PolyPair& p) const;  // via evaluation on Y
  bool contains_functions(int f, int g) const {
    return function_class[f] == function_class[g];
  }
};

VanishingCongruence vanishing(const FunctionSemiring& fs, const Variety& y,
                              const Congruence& rho);

// Z of the vanishing congruence: the Zariski closure of Y for prime rho.
Variety closure_of(const FunctionSemiring& fs, const Variety& y, const Congruence& rho);

/// The family of closed sets of the Zariski rho-topology on B^n, as point
/// bitmasks. Hard bound of 16 points.
struct Topology {
  int arity = 0;
  int base = 0;
  int num_points = 0;
  std::vector<std::uint32_t> closed_masks;  // sorted

  bool is_closed(std::uint32_t mask) const;
};

Topology materialize_topology(const FunctionSemiring& fs, const Congruence& rho,
                              int max_points = 16);

std::uint32_t variety_mask(const Variety& y);
Variety variety_from_mask(int arity, int base, int num_points, std::uint32_t mask);

// Exact: Y cannot be covered by two proper relatively-closed subsets. The
// empty set counts as reducible.
bool is_irreducible(const Variety& y, const Topology& topo);

// Primality of rho_B(Y) on the function semiring. Scans quadruples of
// distinct Y-restrictions when that space is small; when the restrictions
// realize every map Y -> B the scan collapses to a per-point criterion over
// B^2 value pairs (any map can be completed pointwise).
bool vanishing_is_prime(const FunctionSemiring& fs, const Variety& y, const Congruence& rho);

struct SqrtOverResult {
  int degree_cap = 0;
  long long capped_polynomials = 0;
  long long relation_pairs = 0;   // capped pairs in sqrt(sigma/rho)
  Congruence generated;           // on function ids
  // membership data for capped polynomials
  std::vector<Polynomial> polys;
  std::vector<int> poly_function;          // function id per capped polynomial
  std::vector<int> theta_group;            // coefficientwise sqrt(rho)-group
  std::vector<std::vector<int>> group_sqrt_sigma_classes;  // sorted class sets
  bool relation_contains(int poly_index1, int poly_index2) const;
};

// sqrt(sigma/rho) restricted to polynomials of total degree <= degree_cap:
// pairs coefficientwise congruent mod sqrt(rho) to some capped pair of
// sqrt(sigma). sigma is given by generators and closed on the function
// semiring; its radical is taken there.
SqrtOverResult sqrt_over(const FunctionSemiring& fs, const PairSystem& sigma_gens,
                         const Congruence& rho, int degree_cap);

struct NullstellensatzReport {
  bool inclusion_holds = false;
  bool equality_holds = false;
  long long pairs_checked = 0;
  int degree_cap = 0;
  bool windowed = false;
  long long window = 0;
  std::vector<std::string> witnesses;  // first few equality gaps or violations
};

NullstellensatzReport nullstellensatz_check(const FunctionSemiring& fs,
                                            const PairSystem& sigma_gens, const Congruence& rho,
                                            int degree_cap);

struct HomCountReport {
  long long points = 0;
  long long homs = 0;
  bool windowed = false;
  long long window = 0;
  std::vector<std::vector<int>> assignments;  // satisfying tuples over B/rho (class ids)
};

// Both sides of the point/hom bijection, by independent code paths: class
// tuples of the zero set mod rho versus tuples over the quotient satisfying
// every pair of T evaluated there.
HomCountReport hom_count(const EmbeddedSemiring& ctx, const PairSystem& t, const Congruence& rho,
                         const FunctionLimits& limits = {});

}  // namespace semicong

#endif
