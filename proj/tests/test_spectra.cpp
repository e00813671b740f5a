#include <doctest.h>

#include <algorithm>

#include "semicong/errors.hpp"
#include "semicong/prng.hpp"
#include "semicong/spectra.hpp"

using namespace semicong;

namespace {

std::vector<Semiring> builtins_up_to(int max_size) {
  std::vector<Semiring> out;
  out.push_back(make_boolean());
  for (int n = 2; n <= max_size; ++n) out.push_back(make_zmod(n));
  for (int k = 1; k + 1 <= max_size; ++k) out.push_back(make_truncated_nat(k));
  for (int k = 1; k + 2 <= max_size; ++k) out.push_back(make_minplus_chain(k));
  return out;
}

const Congruence kMod2 = Congruence::from_partition(6, {{0, 2, 4}, {1, 3, 5}});
const Congruence kMod3 = Congruence::from_partition(6, {{0, 3}, {1, 4}, {2, 5}});

}  // namespace

TEST_CASE("classification of pinned examples") {
  SUBCASE("boolean identity is prime and maximal") {
    const Classification c = classify(make_boolean(), Congruence::identity(2));
    CHECK(c.proper);
    CHECK(c.prime);
    CHECK(c.maximal);
  }

  SUBCASE("truncated_nat 2 identity is not prime") {
    // (2,1)*(2,1) = (2,2) lies on the diagonal while (2,1) does not
    const Classification c = classify(make_truncated_nat(2), Congruence::identity(3));
    CHECK(c.proper);
    CHECK_FALSE(c.prime);
  }

  SUBCASE("mod-2 congruence of zmod6 is prime, maximal and semi-maximal") {
    const Classification c = classify(make_zmod(6), kMod2);
    CHECK(c.prime);
    CHECK(c.maximal);
    CHECK(c.semi_maximal);
  }

  SUBCASE("the improper congruence is flagged non-proper, not an error") {
    const Classification c = classify(make_zmod(4), Congruence::full(4));
    CHECK_FALSE(c.proper);
    CHECK_FALSE(c.prime);
    CHECK(c.plus_saturated);
    CHECK(c.radical);
  }
}

TEST_CASE("classification flag implications") {
  for (const Semiring& s : builtins_up_to(5))
    for (const Congruence& rho : enumerate_congruences(s)) {
      const Classification c = classify(s, rho);
      if (c.prime) CHECK(c.proper);
      if (c.maximal) CHECK(c.proper);
      if (c.semi_maximal) CHECK(c.semi_prime);
      if (c.prime) CHECK(c.semi_prime);
      if (c.prime) CHECK(c.quasi_radical);
      if (c.prime && c.plus_saturated) CHECK(c.radical);
    }
}

TEST_CASE("prime spectra of the pinned builtins") {
  const auto primes6 = spectrum(make_zmod(6), SpectrumKind::prime);
  REQUIRE(primes6.size() == 2);
  CHECK(primes6[0] == kMod2);  // canonical order: mod 2 before mod 3
  CHECK(primes6[1] == kMod3);

  const auto primesb = spectrum(make_boolean(), SpectrumKind::prime);
  REQUIRE(primesb.size() == 1);
  CHECK(primesb[0] == Congruence::identity(2));

  const auto maxt2 = spectrum(make_truncated_nat(2), SpectrumKind::maximal);
  REQUIRE(maxt2.size() == 1);
  CHECK(maxt2[0] == Congruence::from_partition(3, {{0}, {1, 2}}));
}

TEST_CASE("prime spectrum is contained in the semi-prime spectrum") {
  for (const Semiring& s : builtins_up_to(5)) {
    const auto prime = spectrum(s, SpectrumKind::prime);
    const auto semi = spectrum(s, SpectrumKind::semiprime);
    for (const Congruence& rho : prime)
      CHECK(std::count(semi.begin(), semi.end(), rho) == 1);
    const auto maximal = spectrum(s, SpectrumKind::maximal);
    const auto semimax = spectrum(s, SpectrumKind::semimaximal);
    for (const Congruence& rho : maximal)
      CHECK_MESSAGE(std::count(semimax.begin(), semimax.end(), rho) == 1, s.name);
  }
}

TEST_CASE("quotient equivalences for semi-prime and semi-maximal") {
  for (const Semiring& s : builtins_up_to(5))
    for (const Congruence& rho : enumerate_congruences(s)) {
      if (!is_proper(s, rho)) continue;
      const Classification c = classify(s, rho);
      const QuotientResult q = quotient(s, rho);
      CHECK(validate_axioms(q.table).passed);
      const SemiringFlags f = classify_semiring(q.table);
      CHECK(c.semi_prime == f.semidomain);
      CHECK(c.semi_maximal == f.semifield);
    }
}

TEST_CASE("zariski closed sets on the congruence spectrum") {
  const Semiring z6 = make_zmod(6);
  CHECK(zariski_closed(z6, Congruence::identity(6)) == spectrum(z6, SpectrumKind::prime));
  CHECK(zariski_closed(z6, Congruence::full(6)).empty());

  const auto v2 = zariski_closed(z6, kMod2);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == kMod2);
  // V(mod2) u V(mod3) = V(mod2 n mod3) = V(id)
  const auto vmeet = zariski_closed(z6, meet(z6, kMod2, kMod3));
  CHECK(vmeet.size() == 2);
}

TEST_CASE("zariski closed-set axioms over the small builtins") {
  for (const Semiring& s : builtins_up_to(4)) {
    const auto all = enumerate_congruences(s);
    auto closed = [&](const Congruence& sig) { return zariski_closed(s, sig); };
    auto set_union = [](std::vector<Congruence> a, const std::vector<Congruence>& b) {
      for (const Congruence& x : b)
        if (std::count(a.begin(), a.end(), x) == 0) a.push_back(x);
      std::sort(a.begin(), a.end());
      return a;
    };
    auto sorted = [](std::vector<Congruence> a) {
      std::sort(a.begin(), a.end());
      return a;
    };

    CHECK(closed(Congruence::identity(s.n)) == spectrum(s, SpectrumKind::prime));
    CHECK(closed(Congruence::full(s.n)).empty());

    for (const Congruence& s1 : all)
      for (const Congruence& s2 : all)
        CHECK(set_union(closed(s1), closed(s2)) == sorted(closed(meet(s, s1, s2))));

    // intersections over families of up to 3 congruences
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j)
        for (std::size_t k = j; k < all.size(); ++k) {
          Relation un = relation_union(all[i].to_relation(), all[j].to_relation());
          un = relation_union(un, all[k].to_relation());
          const Congruence gen = generated_congruence(s, un);
          const auto ci = closed(all[i]), cj = closed(all[j]), ck = closed(all[k]);
          std::vector<Congruence> inter;
          for (const Congruence& rho : ci)
            if (std::count(cj.begin(), cj.end(), rho) && std::count(ck.begin(), ck.end(), rho))
              inter.push_back(rho);
          CHECK(sorted(inter) == sorted(closed(gen)));
        }
  }
}

TEST_CASE("principal relations and their saturations") {
  const Semiring z4 = make_zmod(4);

  SUBCASE("R(0,2) over zmod4 saturates to the parity congruence") {
    const auto [r, plus] = principal_congruence(z4, 0, 2);
    CHECK(plus == Congruence::from_partition(4, {{0, 2}, {1, 3}}));
    CHECK(is_congruence(z4, plus));
  }

  SUBCASE("diagonal generators keep the identity saturation") {
    for (const Semiring& s : builtins_up_to(4))
      for (int a = 0; a < s.n; ++a) {
        const auto [r, plus] = principal_congruence(s, a, a);
        CHECK(plus == congruence_plus(s, Congruence::identity(s.n)));
      }
  }

  SUBCASE("inclusion chain R(a,b) in {(a,b)}^c in R(a,b)_+ in ({(a,b)}^c)_+") {
    for (const Semiring& s : builtins_up_to(5))
      for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b) {
          const auto [r, plus] = principal_congruence(s, a, b);
          Relation single(s.n);
          single.insert(a, b);
          const Congruence gen = generated_congruence(s, single);
          CHECK(r.subset_of(gen.to_relation()));
          CHECK(gen.subset_of(plus));
          CHECK(plus.subset_of(congruence_plus(s, gen)));
        }
  }
}

TEST_CASE("quotient tables") {
  const Semiring z6 = make_zmod(6);

  SUBCASE("quotient by the identity is isomorphic to the original") {
    const QuotientResult q = quotient(z6, Congruence::identity(6));
    CHECK(q.table.same_structure(z6));
  }

  SUBCASE("zmod6 / mod2 is the 2-element field") {
    const QuotientResult q = quotient(z6, kMod2);
    CHECK(q.table.n == 2);
    CHECK(is_field(q.table));
    CHECK(q.projection == std::vector<int>{0, 1, 0, 1, 0, 1});
  }

  SUBCASE("truncated_nat 2 / {{0},{1,2}} is the boolean semiring") {
    const QuotientResult q =
        quotient(make_truncated_nat(2), Congruence::from_partition(3, {{0}, {1, 2}}));
    CHECK(q.table.same_structure(make_boolean()));
  }

  SUBCASE("improper quotient errors") {
    CHECK_THROWS_AS(quotient(z6, Congruence::full(6)), DomainError);
  }
}

TEST_CASE("ideal-congruence maps") {
  const Semiring z6 = make_zmod(6);

  SUBCASE("zero ideal round-trips") {
    const Congruence rho = ideal_to_congruence(z6, {0});
    CHECK(congruence_to_ideal(z6, rho) == std::vector<int>{0});
  }

  SUBCASE("zmod6 even ideal gives the mod-2 congruence") {
    const Congruence rho = ideal_to_congruence(z6, {0, 2, 4});
    CHECK(rho == kMod2);
    CHECK(congruence_to_ideal(z6, rho) == std::vector<int>{0, 2, 4});
  }

  SUBCASE("all six correspondence laws hold over small builtins") {
    for (const Semiring& s : builtins_up_to(6)) {
      const auto ideals = enumerate_ideals(s);
      const auto congruences =
          s.n <= 5 ? enumerate_congruences(s) : std::vector<Congruence>{};
      for (const auto& j : ideals) {
        const Congruence rho_j = ideal_to_congruence(s, j);
        CHECK(is_congruence(s, rho_j));
        const std::vector<int> back = congruence_to_ideal(s, rho_j);
        CHECK(std::includes(j.begin(), j.end(), back.begin(), back.end()));
        for (const auto& j2 : ideals)
          if (std::includes(j2.begin(), j2.end(), j.begin(), j.end()))
            CHECK(rho_j.subset_of(ideal_to_congruence(s, j2)));
      }
      for (const Congruence& sigma : congruences) {
        const std::vector<int> i_sigma = congruence_to_ideal(s, sigma);
        CHECK(ideal_check(s, i_sigma));
        CHECK(ideal_to_congruence(s, i_sigma).subset_of(sigma));
        for (const Congruence& tau : congruences)
          if (sigma.subset_of(tau)) {
            const std::vector<int> i_tau = congruence_to_ideal(s, tau);
            CHECK(std::includes(i_tau.begin(), i_tau.end(), i_sigma.begin(), i_sigma.end()));
          }
      }
    }
  }
}

TEST_CASE("classification is invariant under isomorphism") {
  Rng rng(31);
  for (const Semiring& s : builtins_up_to(5)) {
    std::vector<int> pi(s.n);
    for (int i = 0; i < s.n; ++i) pi[i] = i;
    for (int i = s.n - 1; i > 0; --i) std::swap(pi[i], pi[rng.below_int(i + 1)]);
    const Semiring t = apply_isomorphism(s, pi);
    for (const Congruence& rho : enumerate_congruences(s)) {
      Congruence moved;
      moved.n = s.n;
      moved.class_of.assign(s.n, 0);
      for (int e = 0; e < s.n; ++e) moved.class_of[pi[e]] = rho.class_of[e];
      moved.normalize();
      const Classification ca = classify(s, rho);
      const Classification cb = classify(t, moved);
      CHECK(ca.proper == cb.proper);
      CHECK(ca.prime == cb.prime);
      CHECK(ca.semi_prime == cb.semi_prime);
      CHECK(ca.maximal == cb.maximal);
      CHECK(ca.semi_maximal == cb.semi_maximal);
      CHECK(ca.radical == cb.radical);
      CHECK(ca.quasi_radical == cb.quasi_radical);
      CHECK(ca.plus_saturated == cb.plus_saturated);
    }
  }
}

TEST_CASE("random semiring generation is deterministic and valid") {
  Rng rng1(99), rng2(99);
  for (int i = 0; i < 10; ++i) {
    const Semiring a = random_semiring(rng1, 3);
    const Semiring b = random_semiring(rng2, 3);
    CHECK(a.same_structure(b));
    CHECK(validate_axioms(a).passed);
  }
}

TEST_CASE("maximal congruence search honors the known results") {
  const MaximalSearchReport rep = search_maximal_nonprime(2, 4, 20240601, 100);
  CHECK(rep.samples == 100);
  CHECK(rep.maximal_seen > 0);
  // rho = rho_+ maximal congruences must be prime; additively idempotent
  // samples must have all maximal congruences prime.
  CHECK(rep.theorem_conflicts == 0);
  CHECK(rep.idempotent_conflicts == 0);

  const MaximalSearchReport again = search_maximal_nonprime(2, 4, 20240601, 100);
  CHECK(again.maximal_seen == rep.maximal_seen);
  CHECK(again.nonprime.size() == rep.nonprime.size());
}

TEST_CASE("prop 2.23 on enumerated congruences of the small builtins") {
  for (const Semiring& s : builtins_up_to(5))
    for (const Congruence& rho : enumerate_congruences(s)) {
      const Classification c = classify(s, rho);
      if (c.maximal && c.plus_saturated) CHECK(c.prime);
    }
}
