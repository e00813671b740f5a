#include "semicong/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "semicong/errors.hpp"

namespace semicong {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::zero(int num_vars) {
  Polynomial p;
  p.num_vars = num_vars;
  return p;
}

Polynomial Polynomial::constant(const Semiring& a, int c, int num_vars) {
  Polynomial p = zero(num_vars);
  if (c != a.zero) p.terms[Monomial(num_vars, 0)] = c;
  return p;
}

Polynomial Polynomial::variable(int index, int num_vars, int one_id) {
  if (index < 0 || index >= num_vars) throw DomainError("variable index out of range");
  Polynomial p = zero(num_vars);
  Monomial m(num_vars, 0);
  m[index] = 1;
  p.terms[m] = one_id;
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, monomial_degree(m));
  return d;
}

int Polynomial::coeff(const Monomial& m, int zero_id) const {
  const auto it = terms.find(m);
  return it == terms.end() ? zero_id : it->second;
}

Polynomial poly_add(const Semiring& a, const Polynomial& f, const Polynomial& g) {
  if (f.num_vars != g.num_vars) throw DomainError("polynomial arity mismatch");
  Polynomial out = f;
  for (const auto& [m, c] : g.terms) {
    const auto it = out.terms.find(m);
    const int sum = it == out.terms.end() ? c : a.add(it->second, c);
    if (sum == a.zero)
      out.terms.erase(m);
    else
      out.terms[m] = sum;
  }
  return out;
}

Polynomial poly_mul(const Semiring& a, const Polynomial& f, const Polynomial& g) {
  if (f.num_vars != g.num_vars) throw DomainError("polynomial arity mismatch");
  Polynomial out = Polynomial::zero(f.num_vars);
  for (const auto& [mf, cf] : f.terms)
    for (const auto& [mg, cg] : g.terms) {
      Monomial m(f.num_vars);
      for (int i = 0; i < f.num_vars; ++i) m[i] = mf[i] + mg[i];
      const int prod = a.mul(cf, cg);
      const auto it = out.terms.find(m);
      const int sum = it == out.terms.end() ? prod : a.add(it->second, prod);
      if (sum == a.zero)
        out.terms.erase(m);
      else
        out.terms[m] = sum;
    }
  return out;
}

Polynomial poly_pow(const Semiring& a, const Polynomial& f, int k) {
  Polynomial out = Polynomial::constant(a, a.one, f.num_vars);
  for (int i = 0; i < k; ++i) out = poly_mul(a, out, f);
  return out;
}

EmbeddedSemiring make_embedding(const Semiring& a, const Semiring& b, std::vector<int> embed) {
  if (static_cast<int>(embed.size()) != a.n) throw DomainError("embedding map has wrong size");
  for (int x : embed)
    if (x < 0 || x >= b.n) throw DomainError("embedding image out of range");
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y)
      if (embed[x] == embed[y]) throw DomainError("embedding is not injective");
  if (embed[a.zero] != b.zero || embed[a.one] != b.one)
    throw DomainError("embedding must fix zero and one");
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (embed[a.add(x, y)] != b.add(embed[x], embed[y]))
        throw DomainError("embedding does not preserve addition");
      if (embed[a.mul(x, y)] != b.mul(embed[x], embed[y]))
        throw DomainError("embedding does not preserve multiplication");
    }
  return {a, b, std::move(embed)};
}

EmbeddedSemiring identity_embedding(const Semiring& a) {
  std::vector<int> id(a.n);
  std::iota(id.begin(), id.end(), 0);
  return {a, a, std::move(id)};
}

namespace {

bool extend_embedding(const Semiring& a, const Semiring& b, std::vector<int>& embed,
                      std::vector<char>& used, int next) {
  if (next == a.n) return true;
  if (embed[next] != -1) return extend_embedding(a, b, embed, used, next + 1);
  for (int img = 0; img < b.n; ++img) {
    if (used[img]) continue;
    embed[next] = img;
    used[img] = 1;
    bool ok = true;
    for (int x = 0; x <= next && ok; ++x)
      for (int y = 0; y <= next && ok; ++y) {
        if (embed[x] == -1 || embed[y] == -1) continue;
        const int s = a.add(x, y), p = a.mul(x, y);
        if (embed[s] != -1 && b.add(embed[x], embed[y]) != embed[s]) ok = false;
        if (embed[p] != -1 && b.mul(embed[x], embed[y]) != embed[p]) ok = false;
      }
    if (ok && extend_embedding(a, b, embed, used, next + 1)) return true;
    used[img] = 0;
    embed[next] = -1;
  }
  return false;
}

}  // namespace

EmbeddedSemiring find_embedding(const Semiring& a, const Semiring& b) {
  if (a.same_structure(b)) return {a, b, [&] {
                               std::vector<int> id(a.n);
                               std::iota(id.begin(), id.end(), 0);
                               return id;
                             }()};
  std::vector<int> embed(a.n, -1);
  std::vector<char> used(b.n, 0);
  embed[a.zero] = b.zero;
  used[b.zero] = 1;
  embed[a.one] = b.one;
  used[b.one] = 1;
  if (!extend_embedding(a, b, embed, used, 0))
    throw DomainError("no embedding of " + a.name + " into " + b.name);
  return make_embedding(a, b, std::move(embed));
}

int evaluate(const Polynomial& f, std::span<const int> point, const EmbeddedSemiring& ctx) {
  if (static_cast<int>(point.size()) != f.num_vars)
    throw DomainError("evaluation point arity mismatch");
  const Semiring& b = ctx.target;
  int acc = b.zero;
  for (const auto& [m, c] : f.terms) {
    int term = ctx.embed[c];
    for (int i = 0; i < f.num_vars; ++i) term = b.mul(term, b.pow(point[i], m[i]));
    acc = b.add(acc, term);
  }
  return acc;
}

bool coeffwise_congruent(const Polynomial& f, const Polynomial& g, const Semiring& a,
                         const Congruence& theta) {
  if (f.num_vars != g.num_vars) throw DomainError("polynomial arity mismatch");
  for (const auto& [m, c] : f.terms)
    if (!theta.same(c, g.coeff(m, a.zero))) return false;
  for (const auto& [m, c] : g.terms)
    if (!theta.same(f.coeff(m, a.zero), c)) return false;
  return true;
}

PolyPair poly_twisted_mul(const Semiring& a, const PolyPair& p, const PolyPair& q) {
  return {poly_add(a, poly_mul(a, p.first, q.first), poly_mul(a, p.second, q.second)),
          poly_add(a, poly_mul(a, p.first, q.second), poly_mul(a, p.second, q.first))};
}

PolyPair poly_twisted_pow(const Semiring& a, const PolyPair& p, int m) {
  if (m < 0) throw DomainError("negative twisted power");
  PolyPair r{Polynomial::constant(a, a.one, p.first.num_vars),
             Polynomial::zero(p.first.num_vars)};
  for (int i = 0; i < m; ++i) r = poly_twisted_mul(a, r, p);
  return r;
}

std::vector<Monomial> enumerate_monomials(int num_vars, int max_degree) {
  std::vector<Monomial> out;
  Monomial cur(num_vars, 0);
  // Odometer over exponent vectors with total degree <= max_degree.
  while (true) {
    if (monomial_degree(cur) <= max_degree) out.push_back(cur);
    int i = 0;
    for (; i < num_vars; ++i) {
      if (cur[i] < max_degree) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
    if (i == num_vars) break;
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<Polynomial> enumerate_polynomials(const Semiring& a, int num_vars, int max_degree) {
  const std::vector<Monomial> mons = enumerate_monomials(num_vars, max_degree);
  std::vector<Polynomial> out;
  std::vector<int> coeffs(mons.size(), 0);
  while (true) {
    Polynomial p = Polynomial::zero(num_vars);
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (coeffs[i] != a.zero) p.terms[mons[i]] = coeffs[i];
    out.push_back(std::move(p));
    std::size_t i = 0;
    for (; i < mons.size(); ++i) {
      if (coeffs[i] + 1 < a.n) {
        ++coeffs[i];
        break;
      }
      coeffs[i] = 0;
    }
    if (i == mons.size()) break;
  }
  return out;
}

}  // namespace semicong
