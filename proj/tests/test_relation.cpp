#include <doctest.h>

#include "semicong/prng.hpp"
#include "semicong/relation.hpp"

using namespace semicong;

namespace {

Relation random_relation(Rng& rng, int n, int max_pairs) {
  Relation r(n);
  const int k = rng.below_int(max_pairs + 1);
  for (int i = 0; i < k; ++i) r.insert(rng.below_int(n), rng.below_int(n));
  return r;
}

std::vector<Semiring> small_builtins() {
  std::vector<Semiring> out;
  out.push_back(make_boolean());
  for (int n = 2; n <= 6; ++n) out.push_back(make_zmod(n));
  for (int k = 1; k <= 5; ++k) out.push_back(make_truncated_nat(k));
  for (int k = 1; k <= 4; ++k) out.push_back(make_minplus_chain(k));
  return out;
}

}  // namespace

TEST_CASE("inverse is an involution") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Relation r = random_relation(rng, 5, 8);
    CHECK(inverse(inverse(r)) == r);
  }
}

TEST_CASE("transitive closure links chains") {
  Relation r(4);
  r.insert(0, 1);
  r.insert(1, 2);
  const Relation t = transitive_closure(r);
  CHECK(t.contains(0, 2));
  CHECK_FALSE(t.contains(2, 0));
}

TEST_CASE("equivalence closure of the empty relation is the identity") {
  CHECK(equivalence_closure(Relation::empty(5)) == Relation::identity(5));
}

TEST_CASE("composition distributes membership through a middle element") {
  Relation r(3), s(3);
  r.insert(0, 1);
  s.insert(1, 2);
  CHECK(compose(r, s).contains(0, 2));
  CHECK(compose(s, r).size() == 0);
}

TEST_CASE("translate saturation: diagonal input stays diagonal") {
  const Semiring z4 = make_zmod(4);
  CHECK(translate_saturate(z4, Relation::identity(4)) == Relation::identity(4));
}

TEST_CASE("translate saturation of {(0,2)} over zmod4") {
  const Semiring z4 = make_zmod(4);
  Relation r(4);
  r.insert(0, 2);
  const Relation rl = translate_saturate(z4, r);
  // {(y, 2x+y)} = pairs whose difference is 0 or 2
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(rl.contains(a, b) == ((b - a) % 2 == 0));
}

TEST_CASE("translate saturation is idempotent and monotone") {
  Rng rng(11);
  for (const Semiring& s : small_builtins())
    for (int trial = 0; trial < 20; ++trial) {
      const Relation r = random_relation(rng, s.n, 6);
      const Relation rl = translate_saturate(s, r);
      CHECK(r.subset_of(rl));
      CHECK(translate_saturate(s, rl) == rl);
      Relation bigger = r;
      bigger.insert(rng.below_int(s.n), rng.below_int(s.n));
      CHECK(rl.subset_of(translate_saturate(s, bigger)));
    }
}

TEST_CASE("translate saturation commutes with inverse and distributes over union") {
  Rng rng(13);
  for (const Semiring& s : small_builtins())
    for (int trial = 0; trial < 10; ++trial) {
      const Relation r1 = random_relation(rng, s.n, 5);
      const Relation r2 = random_relation(rng, s.n, 5);
      CHECK(inverse(translate_saturate(s, r1)) == translate_saturate(s, inverse(r1)));
      CHECK(translate_saturate(s, relation_union(r1, r2)) ==
            relation_union(translate_saturate(s, r1), translate_saturate(s, r2)));
    }
}

TEST_CASE("plus saturation examples") {
  const Semiring b = make_boolean();
  // (1,0): with c = 1, (1+1, 0+1) = (1,1) lands on the diagonal
  CHECK(plus_saturate(b, Relation::identity(2)) == Relation::full(2));

  const Semiring z6 = make_zmod(6);
  CHECK(plus_saturate(z6, Relation::identity(6)) == Relation::identity(6));
}
