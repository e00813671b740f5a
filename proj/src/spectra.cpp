#include "semicong/spectra.hpp"

#include <algorithm>
#include <map>

#include "semicong/errors.hpp"
#include "semicong/prng.hpp"

namespace semicong {

Classification classify(const Semiring& s, const Congruence& rho) {
  if (rho.n != s.n) throw DomainError("congruence owner mismatch");
  Classification c;
  c.proper = is_proper(s, rho);

  if (c.proper) {
    c.prime = true;
    for (int a = 0; a < s.n && c.prime; ++a)
      for (int b = 0; b < s.n && c.prime; ++b)
        for (int x = 0; x < s.n && c.prime; ++x)
          for (int y = 0; y < s.n; ++y) {
            const Pair t = twisted_mul(s, {a, b}, {x, y});
            if (rho.same(t.a, t.b) && !rho.same(a, b) && !rho.same(x, y)) {
              c.prime = false;
              break;
            }
          }

    c.semi_prime = true;
    for (int a = 0; a < s.n && c.semi_prime; ++a)
      for (int b = 0; b < s.n; ++b)
        if (rho.same(s.mul(a, b), s.zero) && !rho.same(a, s.zero) && !rho.same(b, s.zero)) {
          c.semi_prime = false;
          break;
        }

    c.maximal = true;
    for (int a = 0; a < s.n && c.maximal; ++a)
      for (int b = 0; b < s.n; ++b) {
        if (rho.same(a, b)) continue;
        Relation r = rho.to_relation();
        r.insert(a, b);
        if (generated_congruence(s, r) != Congruence::full(s.n)) {
          c.maximal = false;
          break;
        }
      }

    c.semi_maximal = true;
    for (int a = 0; a < s.n && c.semi_maximal; ++a) {
      if (rho.same(a, s.zero)) continue;
      bool has = false;
      for (int b = 0; b < s.n; ++b)
        if (rho.same(s.mul(a, b), s.one)) {
          has = true;
          break;
        }
      if (!has) c.semi_maximal = false;
    }
  }

  const Congruence rad = radical(s, rho);
  const Congruence plus = congruence_plus(s, rho);
  c.radical = rad == rho;
  c.quasi_radical = rad == plus;
  c.plus_saturated = plus == rho;
  return c;
}

SpectrumKind spectrum_kind_from_string(const std::string& s) {
  if (s == "prime") return SpectrumKind::prime;
  if (s == "semiprime") return SpectrumKind::semiprime;
  if (s == "maximal") return SpectrumKind::maximal;
  if (s == "semimaximal") return SpectrumKind::semimaximal;
  throw DomainError("unknown spectrum kind: " + s);
}

std::vector<Congruence> spectrum(const Semiring& a, SpectrumKind kind, int max_size) {
  std::vector<Congruence> out;
  for (const Congruence& rho : enumerate_congruences(a, max_size)) {
    const Classification c = classify(a, rho);
    const bool keep = kind == SpectrumKind::prime       ? c.prime
                      : kind == SpectrumKind::semiprime ? c.semi_prime
                      : kind == SpectrumKind::maximal   ? c.maximal
                                                        : c.semi_maximal;
    if (keep) out.push_back(rho);
  }
  return out;
}

std::vector<Congruence> zariski_closed(const Semiring& a, const Congruence& sigma, int max_size) {
  std::vector<Congruence> out;
  for (const Congruence& rho : spectrum(a, SpectrumKind::prime, max_size))
    if (sigma.subset_of(rho)) out.push_back(rho);
  return out;
}

std::pair<Relation, Congruence> principal_congruence(const Semiring& s, int a, int b) {
  const Relation r = principal_relation(s, a, b);
  auto plus = Congruence::from_relation_if_equivalence(plus_saturate(s, r));
  if (!plus) throw DomainError("principal saturation is not an equivalence");
  return {r, *plus};
}

QuotientResult quotient(const Semiring& s, const Congruence& rho) {
  if (rho.n != s.n) throw DomainError("congruence owner mismatch");
  if (!is_proper(s, rho))
    throw DomainError("quotient by the improper congruence would force 1 = 0");
  QuotientResult q;
  q.projection = rho.class_of;
  const auto classes = rho.classes();
  const int m = static_cast<int>(classes.size());
  q.table.n = m;
  q.table.name = s.name + "/~";
  q.table.zero = rho.class_of[s.zero];
  q.table.one = rho.class_of[s.one];
  q.table.add_tab.assign(static_cast<std::size_t>(m) * m, 0);
  q.table.mul_tab.assign(static_cast<std::size_t>(m) * m, 0);
  q.table.elem_names.resize(m);
  for (int i = 0; i < m; ++i) q.table.elem_names[i] = s.elem_name(classes[i].front());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ri = classes[i].front(), rj = classes[j].front();
      q.table.add_tab[i * m + j] = rho.class_of[s.add(ri, rj)];
      q.table.mul_tab[i * m + j] = rho.class_of[s.mul(ri, rj)];
    }
  return q;
}

Congruence ideal_to_congruence(const Semiring& s, const std::vector<int>& ideal) {
  if (!ideal_check(s, ideal)) throw DomainError("given member set is not an ideal");
  std::vector<std::vector<int>> translate(s.n);
  for (int a = 0; a < s.n; ++a) {
    std::vector<char> seen(s.n, 0);
    for (int j : ideal) seen[s.add(a, j)] = 1;
    for (int e = 0; e < s.n; ++e)
      if (seen[e]) translate[a].push_back(e);
  }
  Congruence c;
  c.n = s.n;
  c.class_of.resize(s.n);
  for (int a = 0; a < s.n; ++a) {
    int id = 0;
    for (; id < a; ++id)
      if (translate[id] == translate[a]) break;
    c.class_of[a] = id;
  }
  c.normalize();
  return c;
}

std::vector<int> congruence_to_ideal(const Semiring& s, const Congruence& sigma) {
  std::vector<int> out;
  for (int a = 0; a < s.n; ++a)
    if (sigma.same(a, s.zero)) out.push_back(a);
  return out;
}

namespace {

// Fills the free entries of a commutative addition table with identity 0 at
// element id 0, then checks associativity.
bool random_add_table(Rng& rng, int n, std::vector<int>& tab) {
  tab.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    tab[x] = x;
    tab[x * n] = x;
  }
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int v = rng.below_int(n);
      tab[x * n + y] = v;
      tab[y * n + x] = v;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (tab[tab[x * n + y] * n + z] != tab[x * n + tab[y * n + z]]) return false;
  return true;
}

// Multiplication with identity 1, absorbing 0, commutative; checks
// associativity and distributivity against the fixed addition table.
bool random_mul_table(Rng& rng, int n, const std::vector<int>& add, std::vector<int>& tab) {
  tab.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    tab[x * n + 1] = x;
    tab[1 * n + x] = x;
  }
  for (int x = 2; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const int v = rng.below_int(n);
      tab[x * n + y] = v;
      tab[y * n + x] = v;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (tab[tab[x * n + y] * n + z] != tab[x * n + tab[y * n + z]]) return false;
        if (tab[x * n + add[y * n + z]] != add[tab[x * n + y] * n + tab[x * n + z]]) return false;
      }
    }
  return true;
}

}  // namespace

Semiring random_semiring(Rng& rng, int size) {
  if (size < 2) throw DomainError("random semiring size must be >= 2");
  Semiring a;
  a.n = size;
  a.zero = 0;
  a.one = 1;
  a.name = "random" + std::to_string(size);
  a.elem_names.resize(size);
  for (int i = 0; i < size; ++i) a.elem_names[i] = std::to_string(i);
  while (true) {
    if (!random_add_table(rng, size, a.add_tab)) continue;
    // A few multiplication attempts per addition table before resampling it.
    for (int tries = 0; tries < 8; ++tries)
      if (random_mul_table(rng, size, a.add_tab, a.mul_tab)) {
        if (validate_axioms(a).passed) return a;
      }
  }
}

MaximalSearchReport search_maximal_nonprime(int size_lo, int size_hi, std::uint64_t seed,
                                            int count) {
  if (size_lo < 2 || size_hi < size_lo) throw DomainError("bad size range for search");
  if (size_hi > kDefaultEnumBound) throw DomainError("search size exceeds enumeration bound");
  MaximalSearchReport rep;
  rep.seed = seed;
  rep.size_lo = size_lo;
  rep.size_hi = size_hi;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int size = size_lo + rng.below_int(size_hi - size_lo + 1);
    const Semiring a = random_semiring(rng, size);
    const bool idem = classify_semiring(a).additively_idempotent;
    for (const Congruence& rho : enumerate_congruences(a)) {
      const Classification c = classify(a, rho);
      if (!c.maximal) continue;
      ++rep.maximal_seen;
      if (c.prime) continue;
      MaximalSearchWitness w;
      w.table = a;
      w.maximal_congruence = rho;
      w.additively_idempotent = idem;
      w.plus_saturated = c.plus_saturated;
      if (c.plus_saturated) ++rep.theorem_conflicts;
      if (idem) ++rep.idempotent_conflicts;
      rep.nonprime.push_back(std::move(w));
    }
    ++rep.samples;
  }
  return rep;
}

}  // namespace semicong
