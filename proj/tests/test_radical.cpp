#include <doctest.h>

#include "semicong/congruence.hpp"
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

}  // namespace

TEST_CASE("plus saturation of a congruence is an idempotent congruence") {
  for (const Semiring& s : builtins_up_to(6))
    for (const Congruence& rho : enumerate_congruences(s)) {
      const Congruence plus = congruence_plus(s, rho);
      CHECK(is_congruence(s, plus));
      CHECK(rho.subset_of(plus));
      CHECK(congruence_plus(s, plus) == plus);
    }
}

TEST_CASE("radical of the identity over zmod4 pairs elements of equal parity") {
  const Semiring z4 = make_zmod(4);
  const Congruence expected = Congruence::from_partition(4, {{0, 2}, {1, 3}});
  CHECK(radical(z4, Congruence::identity(4)) == expected);
  CHECK(radical_alt(z4, Congruence::identity(4)) == expected);
}

TEST_CASE("radical of the identity over truncated_nat 2 is everything") {
  const Semiring t2 = make_truncated_nat(2);
  CHECK(radical(t2, Congruence::identity(3)) == Congruence::full(3));
}

TEST_CASE("radical laws hold for every congruence of every small builtin") {
  for (const Semiring& s : builtins_up_to(5)) {
    const auto all = enumerate_congruences(s);
    for (const Congruence& rho : all) {
      const Congruence rad = radical(s, rho);
      const Congruence plus = congruence_plus(s, rho);
      CHECK(is_congruence(s, rad));
      CHECK(rho.subset_of(rad));                       // rho inside sqrt(rho)
      CHECK(congruence_plus(s, rad) == rad);           // (sqrt rho)_+ = sqrt rho
      CHECK(radical(s, rad) == rad);                   // sqrt sqrt = sqrt
      CHECK(radical(s, plus) == rad);                  // sqrt(rho_+) = sqrt(rho)
      CHECK(plus.subset_of(rad));                      // rho_+ inside sqrt(rho)
      CHECK(radical_alt(s, rho) == rad);               // referee form agrees
      const Classification cls = classify(s, rho);
      if (cls.prime) CHECK(rad == plus);               // prime => quasi-radical
    }
    // monotonicity over all congruence pairs
    for (const Congruence& r1 : all)
      for (const Congruence& r2 : all)
        if (r1.subset_of(r2)) {
          CHECK(radical(s, r1).subset_of(radical(s, r2)));
          CHECK(congruence_plus(s, r1).subset_of(congruence_plus(s, r2)));
        }
  }
}

TEST_CASE("radical of the improper congruence") {
  const Semiring z4 = make_zmod(4);
  CHECK(radical(z4, Congruence::full(4)) == Congruence::full(4));
}

TEST_CASE("nil relations of truncated_nat 2") {
  const Semiring t2 = make_truncated_nat(2);
  const NilReport rep = nil_relations(t2);

  Relation expected = Relation::identity(3);
  expected.insert(1, 2);
  expected.insert(2, 1);
  CHECK(rep.r_nil == expected);  // (1,0) stays out, (2,1) is in
  CHECK(rep.quasi_nil == Congruence::from_partition(3, {{0}, {1, 2}}));
  CHECK(rep.rho_nil == Congruence::full(3));
  CHECK_FALSE(rep.reduced);
  CHECK_FALSE(rep.strongly_reduced);
  // strict inclusion between the quasi-nilpotent and nilpotent congruences
  CHECK(rep.quasi_nil.subset_of(rep.rho_nil));
  CHECK(rep.quasi_nil != rep.rho_nil);
}

TEST_CASE("zmod6 is reduced") {
  const NilReport rep = nil_relations(make_zmod(6));
  CHECK(rep.reduced);
  CHECK(rep.r_nil == Relation::identity(6));
}

TEST_CASE("rho_nil equals the radical of the identity on every small builtin") {
  for (const Semiring& s : builtins_up_to(6)) {
    const NilReport rep = nil_relations(s);
    CHECK(rep.rho_nil == radical(s, Congruence::identity(s.n)));
    CHECK(rep.quasi_nil.subset_of(rep.rho_nil));
  }
}

TEST_CASE("additive annihilation collapses rho_nil to R_nil and reduces the quotient") {
  for (int n = 2; n <= 6; ++n) {
    const Semiring z = make_zmod(n);
    REQUIRE(classify_semiring(z).additive_annihilation);
    const NilReport rep = nil_relations(z);
    CHECK(rep.rho_nil.to_relation() == rep.r_nil);
    const QuotientResult q = quotient(z, rep.rho_nil);
    CHECK(nil_relations(q.table).strongly_reduced);
  }
}
