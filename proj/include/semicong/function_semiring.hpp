#ifndef SEMICONG_FUNCTION_SEMIRING_HPP
#define SEMICONG_FUNCTION_SEMIRING_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "semicong/polynomial.hpp"

namespace semicong {

struct FunctionLimits {
  int max_points = 64;
  int max_functions = 25000;
};

/// The finite semiring of polynomial functions B^n -> B: the least set of
/// point tables containing the embedded constants and the coordinate
/// projections, closed under pointwise + and *. Every quantification over
/// the infinite polynomial semiring reduces to this set, exactly, because
/// zero-set and vanishing membership depend only on induced functions.
///
/// Each function carries the first witness polynomial found in generation
/// order. Over a finite field (with an onto embedding) the closure is the
/// full function space and is constructed directly, with interpolation
/// witnesses.
struct FunctionSemiring {
  EmbeddedSemiring ctx;
  int arity = 0;
  int num_points = 0;
  std::vector<std::vector<std::uint8_t>> tables;  // function id -> value at point rank
  std::vector<Polynomial> witnesses;

  int size() const { return static_cast<int>(tables.size()); }
  int find(const std::vector<std::uint8_t>& table) const;  // -1 if absent
  std::vector<std::uint8_t> table_of(const Polynomial& f) const;
  int id_of(const Polynomial& f) const;  // -1 if the induced table is absent

  int add_fn(int f, int g) const;  // id of the pointwise sum
  int mul_fn(int f, int g) const;
  int const_fn(int coeff_id) const;  // id of the embedded constant

  // point rank <-> coordinates (coordinate 0 varies fastest)
  std::vector<int> point_coords(int rank) const;
  int point_rank(std::span<const int> coords) const;

 private:
  std::unordered_map<std::string, int> index_;
  friend FunctionSemiring function_semiring(const EmbeddedSemiring&, int, const FunctionLimits&);
};

FunctionSemiring function_semiring(const EmbeddedSemiring& ctx, int arity,
                                   const FunctionLimits& limits = {});

// The closure as an explicit operation-table semiring (carrier = function
// ids), for reuse of the congruence machinery. Guarded: the tables are
// quadratic in the closure size.
Semiring as_semiring(const FunctionSemiring& fs, int max_size = 600);

// Congruence on the function ids generated by the given seed pairs,
// propagated through the pointwise operations (representative-based
// union-find fixpoint; works for closures too large for as_semiring).
Congruence generated_congruence_on_functions(const FunctionSemiring& fs,
                                             const std::vector<std::pair<int, int>>& seeds);

}  // namespace semicong

#endif
