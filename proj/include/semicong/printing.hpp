#ifndef SEMICONG_PRINTING_HPP
#define SEMICONG_PRINTING_HPP

#include <string>

#include "semicong/congruence.hpp"
#include "semicong/geometry.hpp"
#include "semicong/polynomial.hpp"
#include "semicong/relation.hpp"
#include "semicong/semiring.hpp"
#include "semicong/spectra.hpp"

namespace semicong {

// Partition literal, classes ordered by least element: "{0 2 4}{1 3 5}".
std::string print_congruence(const Congruence& c, const Semiring& owner);

// Pair-list form "0~2, 1~3"; diagonal pairs are omitted.
std::string print_relation(const Relation& r, const Semiring& owner);

// Key=value flag lines, one per line, fixed order.
std::string print_classification(const Classification& c);
std::string print_semiring_flags(const SemiringFlags& f);

// Explicit semiring block in script syntax; parse(print(s)) == s.
std::string print_semiring_block(const Semiring& s, const std::string& name);

// Canonical polynomial string in descending graded-lex term order; unit
// coefficients on non-constant monomials are omitted.
std::string print_polynomial(const Polynomial& f, const Semiring& coeff);

// "(a b)" coordinate tuples with element names.
std::string print_point(const std::vector<int>& coords, const Semiring& b);
std::string print_variety(const Variety& y, const Semiring& b);  // space-separated tuples

std::string print_axiom_report(const AxiomReport& rep);

}  // namespace semicong

#endif
