#include <doctest.h>

#include "semicong/errors.hpp"
#include "semicong/polynomial.hpp"
#include "semicong/prng.hpp"
#include "semicong/printing.hpp"
#include "semicong/script.hpp"

using namespace semicong;

TEST_CASE("canonical form drops zero coefficients") {
  const Semiring z4 = make_zmod(4);
  const Polynomial two = Polynomial::constant(z4, 2, 1);
  const Polynomial sum = poly_add(z4, two, two);  // 2 + 2 = 0
  CHECK(sum == Polynomial::zero(1));
  CHECK(sum.total_degree() == -1);
}

TEST_CASE("evaluation of pinned examples") {
  const Semiring z5 = make_zmod(5);
  const EmbeddedSemiring ctx = identity_embedding(z5);

  SUBCASE("x^2 at 3 over zmod5") {
    const Polynomial f = parse_polynomial("x^2", z5, 1);
    const std::vector<int> p{3};
    CHECK(evaluate(f, p, ctx) == 4);
  }

  SUBCASE("constants evaluate through the embedding") {
    const Polynomial c = Polynomial::constant(z5, 2, 1);
    for (int x = 0; x < 5; ++x) {
      const std::vector<int> p{x};
      CHECK(evaluate(c, p, ctx) == 2);
    }
  }

  SUBCASE("arity mismatch is rejected") {
    const Polynomial f = parse_polynomial("x1 + x2", z5, 2);
    const std::vector<int> p{3};
    CHECK_THROWS_AS(evaluate(f, p, ctx), DomainError);
  }
}

TEST_CASE("evaluation is a homomorphism for fixed points") {
  const Semiring z6 = make_zmod(6);
  const EmbeddedSemiring ctx = identity_embedding(z6);
  Rng rng(41);
  const auto polys = enumerate_polynomials(z6, 1, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial& f = polys[rng.below_int(static_cast<int>(polys.size()))];
    const Polynomial& g = polys[rng.below_int(static_cast<int>(polys.size()))];
    const std::vector<int> p{rng.below_int(6)};
    CHECK(evaluate(poly_mul(z6, f, g), p, ctx) ==
          z6.mul(evaluate(f, p, ctx), evaluate(g, p, ctx)));
    CHECK(evaluate(poly_add(z6, f, g), p, ctx) ==
          z6.add(evaluate(f, p, ctx), evaluate(g, p, ctx)));
  }
}

TEST_CASE("coefficientwise congruence") {
  const Semiring z6 = make_zmod(6);
  const Congruence mod2 = Congruence::from_partition(6, {{0, 2, 4}, {1, 3, 5}});

  const Polynomial f = parse_polynomial("x + 1", z6, 1);
  const Polynomial g = parse_polynomial("3*x + 5", z6, 1);
  const Polynomial h = parse_polynomial("x^2", z6, 1);

  CHECK(coeffwise_congruent(f, g, z6, mod2));
  CHECK(coeffwise_congruent(f, f, z6, Congruence::identity(6)));
  CHECK_FALSE(coeffwise_congruent(f, h, z6, Congruence::identity(6)));

  SUBCASE("congruent coefficients force congruent values on the coefficient space") {
    const EmbeddedSemiring ctx = identity_embedding(z6);
    for (const Polynomial& a : enumerate_polynomials(z6, 1, 2))
      for (const Polynomial& b : {f, g, h}) {
        if (!coeffwise_congruent(a, b, z6, mod2)) continue;
        for (int x = 0; x < 6; ++x) {
          const std::vector<int> p{x};
          CHECK(mod2.same(evaluate(a, p, ctx), evaluate(b, p, ctx)));
        }
      }
  }
}

TEST_CASE("twisted polynomial powers commute with evaluation") {
  const Semiring z5 = make_zmod(5);
  const EmbeddedSemiring ctx = identity_embedding(z5);

  SUBCASE("pinned instance: (x,1) squared at x=2") {
    const PolyPair p{parse_polynomial("x", z5, 1), parse_polynomial("1", z5, 1)};
    const PolyPair sq = poly_twisted_pow(z5, p, 2);
    const std::vector<int> at{2};
    const Pair via_poly{evaluate(sq.first, at, ctx), evaluate(sq.second, at, ctx)};
    const Pair via_values = twisted_pow(z5, {2, 1}, 2);
    CHECK(via_poly == via_values);
    CHECK(via_values == Pair{0, 4});
  }

  SUBCASE("m = 1 leaves the pair unchanged") {
    const PolyPair p{parse_polynomial("x^2 + 3", z5, 1), parse_polynomial("x", z5, 1)};
    CHECK(poly_twisted_pow(z5, p, 1) == p);
  }

  SUBCASE("exhaustive: all degree <= 2 pairs over zmod5, one variable, m <= 4") {
    const auto polys = enumerate_polynomials(z5, 1, 2);
    for (const Polynomial& f : polys)
      for (const Polynomial& g : polys) {
        PolyPair power{Polynomial::constant(z5, z5.one, 1), Polynomial::zero(1)};
        for (int m = 1; m <= 4; ++m) {
          power = poly_twisted_mul(z5, power, {f, g});
          for (int x = 0; x < 5; ++x) {
            const std::vector<int> at{x};
            const Pair lhs{evaluate(power.first, at, ctx), evaluate(power.second, at, ctx)};
            const Pair rhs =
                twisted_pow(z5, {evaluate(f, at, ctx), evaluate(g, at, ctx)}, m);
            CHECK(lhs == rhs);
          }
        }
      }
  }
}

TEST_CASE("embedding validation") {
  const Semiring b = make_boolean();
  const Semiring m = make_minplus_chain(2);

  SUBCASE("boolean embeds into a minplus chain") {
    const EmbeddedSemiring e = find_embedding(b, m);
    CHECK(e.embed[b.zero] == m.zero);
    CHECK(e.embed[b.one] == m.one);
  }

  SUBCASE("zmod2 does not embed into zmod4") {
    CHECK_THROWS_AS(find_embedding(make_zmod(2), make_zmod(4)), DomainError);
  }

  SUBCASE("non-homomorphic maps are rejected") {
    CHECK_THROWS_AS(make_embedding(make_zmod(2), make_zmod(4), {0, 1}), DomainError);
    CHECK_THROWS_AS(make_embedding(b, m, {0, 0}), DomainError);
  }
}

TEST_CASE("polynomial printing round-trips through the parser") {
  const Semiring z6 = make_zmod(6);
  Rng rng(59);
  const auto polys = enumerate_polynomials(z6, 2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial& f = polys[rng.below_int(static_cast<int>(polys.size()))];
    const std::string text = print_polynomial(f, z6);
    CHECK(parse_polynomial(text, z6, 2) == f);
  }
  CHECK(print_polynomial(Polynomial::zero(1), z6) == "0");
  CHECK(print_polynomial(parse_polynomial("x^2 + 4", z6, 1), z6) == "x1^2 + 4");
}
