#include <doctest.h>

#include "semicong/errors.hpp"
#include "semicong/script.hpp"
#include "semicong/window.hpp"

using namespace semicong;

namespace {

PairSystem nat_system(const std::string& text, int vars) {
  return make_pair_system(vars, parse_nat_system(text, vars));
}

}  // namespace

TEST_CASE("window zero set of x = 0 under mod p is the multiples of p") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    const window::Context w{p, 50};
    const auto z = window::zero_set(w, nat_system("x = 0", 1));
    std::size_t i = 0;
    for (std::uint64_t v = 0; v <= 50; v += p, ++i) {
      REQUIRE(i < z.size());
      CHECK(z[i] == std::vector<std::uint64_t>{v});
    }
    CHECK(z.size() == i);
  }
}

TEST_CASE("window vanishing membership is constant-term congruence") {
  const window::Context w{5, 50};
  const PairSystem t = nat_system("x = 0", 1);
  // f(0) = 3, g(0) = 13: congruent mod 5
  CHECK(window::vanishing_contains(w, t,
                                   {parse_nat_polynomial("2*x + 3", 1),
                                    parse_nat_polynomial("7*x^2 + 13", 1)}));
  CHECK_FALSE(window::vanishing_contains(w, t,
                                         {parse_nat_polynomial("x + 1", 1),
                                          parse_nat_polynomial("x + 2", 1)}));
}

TEST_CASE("window nullstellensatz reproduces the worked equality") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    const window::Context w{p, 50};
    const NullstellensatzReport rep =
        window::nullstellensatz_check(w, nat_system("x = 0", 1), 3, static_cast<int>(p) + 1);
    CHECK(rep.inclusion_holds);
    CHECK(rep.equality_holds);
    CHECK(rep.windowed);
    CHECK(rep.window == 50);
  }
}

TEST_CASE("window nullstellensatz guards") {
  const window::Context w{5, 50};
  CHECK_THROWS_AS(window::nullstellensatz_check(w, nat_system("x^2 = 0", 1), 3, 6), DomainError);
  CHECK_THROWS_AS(window::nullstellensatz_check(w, nat_system("x = 0", 1), 3, 2), DomainError);
}

TEST_CASE("window hom counting reproduces points=1 homs=1") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    const window::Context w{p, 50};
    const HomCountReport rep = window::hom_count(w, nat_system("x = 0", 1));
    CHECK(rep.points == 1);
    CHECK(rep.homs == 1);
    CHECK(rep.window == 50);
  }
}

TEST_CASE("window hom counting on other shapes") {
  const window::Context w{3, 30};
  // x = 1 mod 3: points 1, 4, ..., one class; hom x -> 1
  const HomCountReport rep = window::hom_count(w, nat_system("x = 1", 1));
  CHECK(rep.points == 1);
  CHECK(rep.homs == 1);
  // x + 1 = x: no solutions
  const HomCountReport none = window::hom_count(w, nat_system("x + 1 = x", 1));
  CHECK(none.points == 0);
  CHECK(none.homs == 0);
}

TEST_CASE("window arithmetic overflow is caught") {
  const Polynomial big = parse_nat_polynomial("1000000*x^50", 1);
  const std::vector<std::uint64_t> point{1000000};
  CHECK_THROWS_AS(window::eval_nat(big, point), DomainError);
}
