#include "semicong/window.hpp"

#include <set>

#include "semicong/errors.hpp"

namespace semicong {
namespace window {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw DomainError("window arithmetic overflow");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw DomainError("window arithmetic overflow");
  return a + b;
}

void check_context(const Context& w) {
  if (w.modulus < 2) throw DomainError("window congruence needs a modulus >= 2");
  if (w.bound < 1) throw DomainError("window bound must be positive");
}

}  // namespace

std::uint64_t eval_nat(const Polynomial& f, std::span<const std::uint64_t> point) {
  if (static_cast<int>(point.size()) != f.num_vars)
    throw DomainError("evaluation point arity mismatch");
  std::uint64_t acc = 0;
  for (const auto& [mon, c] : f.terms) {
    std::uint64_t term = static_cast<std::uint64_t>(c);
    for (int i = 0; i < f.num_vars; ++i)
      for (int e = 0; e < mon[i]; ++e) term = checked_mul(term, point[i]);
    acc = checked_add(acc, term);
  }
  return acc;
}

std::vector<std::vector<std::uint64_t>> zero_set(const Context& w, const PairSystem& t) {
  check_context(w);
  if (t.arity < 1 || t.arity > 2)
    throw DomainError("window zero sets support arities 1 and 2");
  std::vector<std::vector<std::uint64_t>> hits;
  std::vector<std::uint64_t> point(t.arity, 0);
  while (true) {
    bool all = true;
    for (const auto& [f, g] : t.pairs)
      if (eval_nat(f, point) % w.modulus != eval_nat(g, point) % w.modulus) {
        all = false;
        break;
      }
    if (all) hits.push_back(point);
    int i = 0;
    for (; i < t.arity; ++i) {
      if (point[i] < w.bound) {
        ++point[i];
        break;
      }
      point[i] = 0;
    }
    if (i == t.arity) break;
  }
  return hits;
}

bool vanishing_contains(const Context& w, const PairSystem& t, const PolyPair& pair) {
  check_context(w);
  for (const auto& point : zero_set(w, t))
    if (eval_nat(pair.first, point) % w.modulus != eval_nat(pair.second, point) % w.modulus)
      return false;
  return true;
}

namespace {

// Capped polynomials over the naturals in one variable: coefficients run
// 0..coeff_cap over monomials 1, x, ..., x^degree_cap.
std::vector<Polynomial> capped_nat_polys(int degree_cap, int coeff_cap) {
  std::vector<Polynomial> out;
  std::vector<int> coeffs(degree_cap + 1, 0);
  while (true) {
    Polynomial p = Polynomial::zero(1);
    for (int d = 0; d <= degree_cap; ++d)
      if (coeffs[d] != 0) p.terms[Monomial{d}] = coeffs[d];
    out.push_back(std::move(p));
    int d = 0;
    for (; d <= degree_cap; ++d) {
      if (coeffs[d] < coeff_cap) {
        ++coeffs[d];
        break;
      }
      coeffs[d] = 0;
    }
    if (d > degree_cap) break;
  }
  return out;
}

int const_coeff(const Polynomial& f) { return f.coeff(Monomial{0}, 0); }

// sigma = {(x1, 0)}^c over the naturals equals the principal relation
// R(x1, 0) = {(x1*u + v, x1*w + v)}: exactly the pairs with equal constant
// coefficient. Any pair of one-variable naturals polynomials splits as
// x1*(shifted part) + constant, so the test is the constant comparison.
bool sigma_contains(const PolyPair& p) { return const_coeff(p.first) == const_coeff(p.second); }

}  // namespace

NullstellensatzReport nullstellensatz_check(const Context& w, const PairSystem& t,
                                            int degree_cap, int coeff_cap) {
  check_context(w);
  if (degree_cap < 1) throw DomainError("a degree cap must be supplied");
  if (coeff_cap < static_cast<int>(w.modulus))
    throw DomainError("coefficient cap below the modulus is uninformative");
  // Window-mode radicals and generated congruences are implemented for the
  // worked single-generator system only.
  const Polynomial want_f = Polynomial::variable(0, 1, 1);
  const Polynomial want_g = Polynomial::zero(1);
  if (t.arity != 1 || t.pairs.size() != 1 || t.pairs[0].first != want_f ||
      t.pairs[0].second != want_g)
    throw DomainError("window nullstellensatz supports exactly the system \"x1 = 0\"");

  NullstellensatzReport rep;
  rep.degree_cap = degree_cap;
  rep.windowed = true;
  rep.window = static_cast<long long>(w.bound);

  const auto z = zero_set(w, t);
  const std::vector<Polynomial> polys = capped_nat_polys(degree_cap, coeff_cap);

  // mod-p value signature of every capped polynomial over the zero set
  std::vector<std::vector<std::uint64_t>> sig(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    sig[i].reserve(z.size());
    for (const auto& point : z) sig[i].push_back(eval_nat(polys[i], point) % w.modulus);
  }
  // sqrt(sigma/rho) membership: a witness pair (g1, g2) in sigma (equal
  // constant coefficients) coefficientwise congruent mod p to (f, g).
  // sqrt(mod p) = mod p over the naturals, so congruent coefficients may
  // only differ by multiples of p; the constant coefficient is the only
  // constrained slot, hence the witness exists iff the constants agree
  // mod p (witness: replace g's constant by f's).
  auto sqrt_over_member = [&](const Polynomial& f, const Polynomial& g) {
    const int cf = const_coeff(f), cg = const_coeff(g);
    if ((cf - cg) % static_cast<int>(w.modulus) != 0) return false;
    Polynomial g2 = g;
    g2.terms.erase(Monomial{0});
    if (cf != 0) g2.terms[Monomial{0}] = cf;
    const PolyPair witness{f, g2};
    return sigma_contains(witness);
  };

  rep.inclusion_holds = true;
  rep.equality_holds = true;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < polys.size(); ++j) {
      ++rep.pairs_checked;
      const bool lhs = sqrt_over_member(polys[i], polys[j]);
      const bool rhs = sig[i] == sig[j];
      if (lhs && !rhs) rep.inclusion_holds = false;
      if (rhs && !lhs) rep.equality_holds = false;
    }
  return rep;
}

HomCountReport hom_count(const Context& w, const PairSystem& t) {
  check_context(w);
  HomCountReport rep;
  rep.windowed = true;
  rep.window = static_cast<long long>(w.bound);

  std::set<std::vector<std::uint64_t>> class_tuples;
  for (const auto& point : zero_set(w, t)) {
    std::vector<std::uint64_t> cls(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) cls[i] = point[i] % w.modulus;
    class_tuples.insert(std::move(cls));
  }
  rep.points = static_cast<long long>(class_tuples.size());

  // assignments over Z_p = naturals mod p, coefficients reduced mod p
  const int p = static_cast<int>(w.modulus);
  long long space = 1;
  for (int i = 0; i < t.arity; ++i) space *= p;
  for (long long r = 0; r < space; ++r) {
    std::vector<std::uint64_t> tuple(t.arity);
    long long rr = r;
    for (int i = 0; i < t.arity; ++i) {
      tuple[i] = static_cast<std::uint64_t>(rr % p);
      rr /= p;
    }
    bool all = true;
    for (const auto& [f, g] : t.pairs)
      if (eval_nat(f, tuple) % w.modulus != eval_nat(g, tuple) % w.modulus) {
        all = false;
        break;
      }
    if (all) {
      std::vector<int> as_int(tuple.begin(), tuple.end());
      rep.assignments.push_back(std::move(as_int));
      ++rep.homs;
    }
  }
  return rep;
}

}  // namespace window
}  // namespace semicong
