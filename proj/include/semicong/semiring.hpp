#ifndef SEMICONG_SEMIRING_HPP
#define SEMICONG_SEMIRING_HPP

#include <string>
#include <vector>

namespace semicong {

/// A finite commutative semiring given by operation tables. The carrier is
/// the id range 0..n-1; zero/one are ids (not forced to be 0 and 1, since
/// quotient constructions produce arbitrary class ids). Display names are
/// metadata only and never affect structural identity.
struct Semiring {
  int n = 0;
  int zero = 0;
  int one = 0;
  std::vector<int> add_tab;  // n*n row-major
  std::vector<int> mul_tab;  // n*n row-major
  std::string name;
  std::vector<std::string> elem_names;

  int add(int a, int b) const { return add_tab[a * n + b]; }
  int mul(int a, int b) const { return mul_tab[a * n + b]; }

  // a^k with a^0 = one.
  int pow(int a, int k) const;
  // k-fold sum of x (the implicit natural-number action); nat_times(0, x) = zero.
  int nat_times(int k, int x) const;

  const std::string& elem_name(int a) const { return elem_names[a]; }
  int elem_by_name(const std::string& s) const;  // -1 if absent

  // Structural identity ignores name metadata.
  bool same_structure(const Semiring& o) const {
    return n == o.n && zero == o.zero && one == o.one && add_tab == o.add_tab &&
           mul_tab == o.mul_tab;
  }
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;
};

struct AxiomReport {
  bool passed = false;
  std::vector<AxiomViolation> violations;
};

// Exhaustive table scan of the semiring axioms: +assoc, +comm, +identity,
// *assoc, *comm, *identity, distributivity (both sides), 0-absorption and
// one != zero. Out-of-range table entries are a structural defect, not an
// axiom violation, and throw DomainError.
AxiomReport validate_axioms(const Semiring& a);

struct SemiringFlags {
  bool semidomain = false;
  bool semifield = false;
  bool additive_annihilation = false;
  bool additively_idempotent = false;
};

SemiringFlags classify_semiring(const Semiring& a);

// True when the semiring is a field: a semifield whose addition admits
// inverses. Over a finite field every function is polynomial, which the
// geometry module exploits.
bool is_field(const Semiring& a);

Semiring make_boolean();
Semiring make_zmod(int n);
// {0..k} with addition and multiplication saturating at k.
Semiring make_truncated_nat(int k);
// {inf, 0..k} with min as addition (zero = inf) and saturating + as
// multiplication (one = 0).
Semiring make_minplus_chain(int k);
// Dispatch by kind name: boolean | zmod | truncated_nat | minplus_chain.
Semiring make_builtin(const std::string& kind, int param);

// (A x A, +, *) with the twisted product; element ids are a*n+b.
Semiring pair_semiring(const Semiring& a);

bool ideal_check(const Semiring& a, const std::vector<int>& members);
// All ideals, each sorted, the list ordered lexicographically.
std::vector<std::vector<int>> enumerate_ideals(const Semiring& a);

// Relabels the carrier through permutation pi (element i becomes pi[i]).
Semiring apply_isomorphism(const Semiring& a, const std::vector<int>& pi);

}  // namespace semicong

#endif
