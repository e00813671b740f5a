#include <doctest.h>

#include "semicong/errors.hpp"
#include "semicong/function_semiring.hpp"
#include "semicong/script.hpp"

using namespace semicong;

TEST_CASE("boolean functions in one variable") {
  const FunctionSemiring fs = function_semiring(identity_embedding(make_boolean()), 1);
  // constants 0 and 1 plus the identity; x+1 collapses to the constant 1
  CHECK(fs.size() == 3);
  for (int f = 0; f < fs.size(); ++f) {
    CHECK(fs.table_of(fs.witnesses[f]) == fs.tables[f]);
    for (int g = 0; g < fs.size(); ++g) {
      CHECK(fs.add_fn(f, g) >= 0);  // closure re-running adds nothing
      CHECK(fs.mul_fn(f, g) >= 0);
    }
  }
}

TEST_CASE("nullary closure is the embedded image") {
  const FunctionSemiring fs = function_semiring(identity_embedding(make_zmod(4)), 0);
  CHECK(fs.size() == 4);
  CHECK(fs.num_points == 1);
}

TEST_CASE("finite field closures hold every function") {
  const Semiring z3 = make_zmod(3);
  const FunctionSemiring fs = function_semiring(identity_embedding(z3), 1);
  CHECK(fs.size() == 27);  // 3^3 functions on a 3-point line
  for (int f = 0; f < fs.size(); ++f)
    CHECK(fs.table_of(fs.witnesses[f]) == fs.tables[f]);
}

TEST_CASE("polynomial functions mod 6 form the classical closure") {
  const FunctionSemiring fs = function_semiring(identity_embedding(make_zmod(6)), 1);
  CHECK(fs.size() == 108);  // 6 * 6 * 3
  for (int f = 0; f < fs.size(); ++f)
    CHECK(fs.table_of(fs.witnesses[f]) == fs.tables[f]);
}

TEST_CASE("closure as an explicit semiring passes the axioms") {
  for (const Semiring& b : {make_boolean(), make_truncated_nat(2), make_minplus_chain(2)}) {
    const FunctionSemiring fs = function_semiring(identity_embedding(b), 1);
    const Semiring table = as_semiring(fs);
    CHECK(validate_axioms(table).passed);
  }
}

TEST_CASE("point rank encoding round-trips") {
  const FunctionSemiring fs = function_semiring(identity_embedding(make_zmod(3)), 2);
  for (int r = 0; r < fs.num_points; ++r) {
    const std::vector<int> coords = fs.point_coords(r);
    CHECK(fs.point_rank(coords) == r);
  }
}

TEST_CASE("bound refusals") {
  CHECK_THROWS_AS(function_semiring(identity_embedding(make_zmod(5)), 3), DomainError);
  const FunctionSemiring fs = function_semiring(identity_embedding(make_zmod(6)), 1);
  CHECK_THROWS_AS(as_semiring(fs, 10), DomainError);
}

TEST_CASE("generated congruences on function ids") {
  const Semiring z5 = make_zmod(5);
  const FunctionSemiring fs = function_semiring(identity_embedding(z5), 1);
  // x ~ 2: every function becomes identified with its value pattern at 2
  const int x = fs.id_of(parse_polynomial("x", z5, 1));
  const int two = fs.id_of(parse_polynomial("2", z5, 1));
  REQUIRE(x >= 0);
  REQUIRE(two >= 0);
  const Congruence c = generated_congruence_on_functions(fs, {{x, two}});
  // the resulting quotient identifies f with f(2): 5 classes
  CHECK(c.num_classes() == 5);
  const int x2 = fs.id_of(parse_polynomial("x^2", z5, 1));
  const int four = fs.id_of(parse_polynomial("4", z5, 1));
  CHECK(c.same(x2, four));
}
