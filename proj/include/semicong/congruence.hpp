#ifndef SEMICONG_CONGRUENCE_HPP
#define SEMICONG_CONGRUENCE_HPP

#include <optional>
#include <vector>

#include "semicong/relation.hpp"
#include "semicong/semiring.hpp"
#include "semicong/twisted.hpp"

namespace semicong {

/// A partition of the carrier in restricted-growth normal form: class ids are
/// assigned in order of first appearance, so equal partitions have equal
/// class_of vectors and the lexicographic order on class_of is canonical.
/// Compatibility with the semiring operations is NOT implied by the type;
/// is_congruence checks it. Partition-shaped values double as plain
/// equivalences (inputs to flat).
struct Congruence {
  int n = 0;
  std::vector<int> class_of;

  static Congruence identity(int n);
  static Congruence full(int n);
  // Validates that the classes form a partition of 0..n-1.
  static Congruence from_partition(int n, const std::vector<std::vector<int>>& classes);
  static std::optional<Congruence> from_relation_if_equivalence(const Relation& r);

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  int num_classes() const;
  std::vector<std::vector<int>> classes() const;  // each sorted, ordered by min element
  Relation to_relation() const;
  bool subset_of(const Congruence& o) const;  // refinement order (as pair sets)

  void normalize();  // restore restricted-growth form after edits
  auto operator<=>(const Congruence&) const = default;
};

bool is_proper(const Semiring& a, const Congruence& rho);
// Exhaustive compatibility scan: a~b and c~d imply a+c~b+d and ac~bd.
bool is_congruence(const Semiring& a, const Congruence& rho);

// Smallest congruence containing R, by union-find merge propagation: merge
// each pair of R, then propagate a~b to a+c~b+c and ac~bc for all c until
// stable. Equality with the literal (R^L)^e construction is a test
// obligation, not an assumption.
Congruence generated_congruence(const Semiring& a, const Relation& r);

struct WitnessChain {
  // nodes z_1..z_k with endpoints first/last; forward[i] tells whether
  // (z_i, z_i+1) in R^L (true) or (z_i+1, z_i) in R^L (false).
  std::vector<int> nodes;
  std::vector<bool> forward;
};

// A chain through R^L steps proving (p.a, p.b) in R^c, or nullopt when the
// pair is outside the generated congruence. The a = b case yields the
// single-node chain.
std::optional<WitnessChain> witness_chain(const Semiring& a, const Relation& r, Pair p);
bool verify_witness_chain(const Semiring& a, const Relation& r, Pair p, const WitnessChain& ch);

inline constexpr int kDefaultEnumBound = 8;

// All congruences, iterating set partitions in restricted-growth-string
// order and filtering by compatibility. Refuses carriers above the bound
// (Bell(8) = 4140 partitions at the default).
std::vector<Congruence> enumerate_congruences(const Semiring& a, int max_size = kDefaultEnumBound);

Congruence meet(const Semiring& a, const Congruence& rho, const Congruence& sigma);
// (rho o sigma)^inf; also equals the congruence generated by the union.
Congruence join(const Semiring& a, const Congruence& rho, const Congruence& sigma);

// rho_+ for a congruence input (always a congruence again).
Congruence congruence_plus(const Semiring& a, const Congruence& rho);

// sqrt(rho): pairs (a,b) such that (a+c, b+c)^{*n} lands in rho for some c
// and some n >= 1. The power search is exact: it walks the orbit of twisted
// powers in the finite pair space with cycle detection, no cutoff.
Congruence radical(const Semiring& a, const Congruence& rho);

// Alternative characterization: (a,b)^{*n} + (c,c) in rho for some c, n.
// Must equal radical on every instance.
Congruence radical_alt(const Semiring& a, const Congruence& rho);

struct NilReport {
  Relation r_nil;          // pairs with some twisted power on the diagonal
  Congruence rho_nil;      // (R_nil)_+ = sqrt(id)
  Congruence quasi_nil;    // generated congruence of R_nil
  bool reduced = false;           // R_nil = id
  bool strongly_reduced = false;  // rho_nil = id
};
NilReport nil_relations(const Semiring& a);

// E^flat: the largest congruence contained in the equivalence E.
Congruence flat(const Semiring& a, const Congruence& equivalence);

}  // namespace semicong

#endif
