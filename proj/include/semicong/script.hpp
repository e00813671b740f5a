#ifndef SEMICONG_SCRIPT_HPP
#define SEMICONG_SCRIPT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semicong/geometry.hpp"
#include "semicong/polynomial.hpp"
#include "semicong/relation.hpp"
#include "semicong/semiring.hpp"

namespace semicong {

/// Declarations of a workbench script, in order, with name lookup.
///
/// Grammar (whitespace-insensitive, '#' comments to end of line):
///   semiring NAME builtin KIND [NAT] end
///   semiring NAME elements NAME+ zero NAME one NAME
///            (add NAME NAME = NAME | mul NAME NAME = NAME)* end
///   congruence NAME on SEMIRING = {..}{..} | pairs a~b, ... | mod NAT
///   relation NAME on SEMIRING = pairs a~b, ...
///   system NAME over SEMIRING in SEMIRING vars NAT = "f = g; ..."
///
/// Expression grammar inside system strings:
///   expr := term ('+' term)* ; term := factor ('*' factor)*
///   factor := atom ('^' NAT)? ; atom := element-name | 'x' NAT? | '(' expr ')'
struct ScriptSemiring {
  std::string name;
  bool is_nat = false;  // builtin nat: the bounded-window pseudo-carrier
  Semiring table;       // unset when is_nat
};

struct ScriptCongruence {
  std::string name;
  std::string owner;
  bool is_mod = false;        // mod-p literal on the nat pseudo-carrier
  std::uint64_t mod_p = 0;
  Congruence value;           // unset when is_mod
  bool enlarged = false;      // a pairs literal was strictly enlarged by generation
};

struct ScriptRelation {
  std::string name;
  std::string owner;
  Relation value;
};

struct ScriptSystem {
  std::string name;
  std::string over, in;
  int vars = 0;
  bool nat_coeffs = false;  // system over the nat pseudo-carrier
  PairSystem system;
};

struct WorkbenchScript {
  std::vector<ScriptSemiring> semirings;
  std::vector<ScriptCongruence> congruences;
  std::vector<ScriptRelation> relations;
  std::vector<ScriptSystem> systems;

  const ScriptSemiring& semiring(const std::string& name) const;
  const ScriptCongruence& congruence(const std::string& name) const;
  const ScriptRelation& relation(const std::string& name) const;
  const ScriptSystem& system(const std::string& name) const;
};

WorkbenchScript parse_script(std::string_view text);

// Standalone expression entry points (shared by the CLI's --check-pair).
Polynomial parse_polynomial(std::string_view text, const Semiring& a, int num_vars);
std::vector<PolyPair> parse_system(std::string_view text, const Semiring& a, int num_vars);
// Window-mode variants: coefficients are literal naturals.
Polynomial parse_nat_polynomial(std::string_view text, int num_vars);
std::vector<PolyPair> parse_nat_system(std::string_view text, int num_vars);

}  // namespace semicong

#endif
