#ifndef SEMICONG_POLYNOMIAL_HPP
#define SEMICONG_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <vector>

#include "semicong/congruence.hpp"
#include "semicong/semiring.hpp"

namespace semicong {

using Monomial = std::vector<int>;  // exponent vector, length num_vars

int monomial_degree(const Monomial& m);

// Graded lexicographic: lower total degree first, then lex on exponents.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over a coefficient semiring. Zero
/// coefficients are never stored; the zero polynomial is the empty term map.
/// Coefficients are element ids of the owning semiring (window mode reuses
/// the type with literal natural values instead).
struct Polynomial {
  int num_vars = 0;
  std::map<Monomial, int, GrlexLess> terms;

  static Polynomial zero(int num_vars);
  static Polynomial constant(const Semiring& a, int c, int num_vars);
  // index is 0-based; one_id is the owning semiring's unit (literal 1 in
  // window mode).
  static Polynomial variable(int index, int num_vars, int one_id);

  int total_degree() const;                         // zero polynomial reports -1
  int coeff(const Monomial& m, int zero_id) const;  // absent terms read as zero
  bool operator==(const Polynomial&) const = default;
};

Polynomial poly_add(const Semiring& a, const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Semiring& a, const Polynomial& f, const Polynomial& g);
Polynomial poly_pow(const Semiring& a, const Polynomial& f, int k);

/// A verified embedding of the coefficient semiring into the evaluation
/// semiring: injective, fixing 0 and 1, preserving both operations.
struct EmbeddedSemiring {
  Semiring coeff;
  Semiring target;
  std::vector<int> embed;
};

EmbeddedSemiring make_embedding(const Semiring& a, const Semiring& b, std::vector<int> embed);
EmbeddedSemiring identity_embedding(const Semiring& a);
// Deterministic backtracking search for an injective homomorphism A -> B;
// throws when none exists.
EmbeddedSemiring find_embedding(const Semiring& a, const Semiring& b);

int evaluate(const Polynomial& f, std::span<const int> point, const EmbeddedSemiring& ctx);

// Coefficientwise congruence: every exponent vector's coefficient pair
// (absent = zero) lies in theta.
bool coeffwise_congruent(const Polynomial& f, const Polynomial& g, const Semiring& a,
                         const Congruence& theta);

using PolyPair = std::pair<Polynomial, Polynomial>;

PolyPair poly_twisted_mul(const Semiring& a, const PolyPair& p, const PolyPair& q);
// m >= 0; m = 0 gives (1, 0).
PolyPair poly_twisted_pow(const Semiring& a, const PolyPair& p, int m);

// All polynomials over A with the given arity and total degree bound, in a
// fixed deterministic order.
std::vector<Polynomial> enumerate_polynomials(const Semiring& a, int num_vars, int max_degree);
std::vector<Monomial> enumerate_monomials(int num_vars, int max_degree);

}  // namespace semicong

#endif
