#include "semicong/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "semicong/errors.hpp"
#include "semicong/printing.hpp"
#include "semicong/spectra.hpp"

namespace semicong {

PairSystem make_pair_system(int arity, std::vector<PolyPair> pairs) {
  if (pairs.empty()) throw DomainError("a system of polynomial pair equations must be non-empty");
  for (const auto& [f, g] : pairs)
    if (f.num_vars != arity || g.num_vars != arity)
      throw DomainError("pair system arity mismatch");
  return {arity, std::move(pairs)};
}

long long Variety::space_size() const {
  long long s = 1;
  for (int i = 0; i < arity; ++i) s *= base;
  return s;
}

bool Variety::contains(int rank) const {
  return std::binary_search(points.begin(), points.end(), rank);
}

Variety variety_from_points(int arity, int base, std::vector<int> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Variety y{arity, base, std::move(points)};
  for (int p : y.points)
    if (p < 0 || p >= y.space_size()) throw DomainError("variety point out of range");
  return y;
}

namespace {
void check_same_space(const Variety& a, const Variety& b) {
  if (a.arity != b.arity || a.base != b.base) throw DomainError("variety space mismatch");
}
}  // namespace

Variety variety_union(const Variety& a, const Variety& b) {
  check_same_space(a, b);
  std::vector<int> pts;
  std::set_union(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                 std::back_inserter(pts));
  return {a.arity, a.base, std::move(pts)};
}

Variety variety_intersection(const Variety& a, const Variety& b) {
  check_same_space(a, b);
  std::vector<int> pts;
  std::set_intersection(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                        std::back_inserter(pts));
  return {a.arity, a.base, std::move(pts)};
}

bool variety_subset(const Variety& a, const Variety& b) {
  check_same_space(a, b);
  return std::includes(b.points.begin(), b.points.end(), a.points.begin(), a.points.end());
}

namespace {

std::vector<int> rank_coords(int rank, int base, int arity) {
  std::vector<int> coords(arity);
  for (int i = 0; i < arity; ++i) {
    coords[i] = rank % base;
    rank /= base;
  }
  return coords;
}

long long checked_space(const Semiring& b, int arity, const FunctionLimits& limits) {
  long long pts = 1;
  for (int i = 0; i < arity; ++i) {
    pts *= b.n;
    if (pts > limits.max_points)
      throw DomainError("affine space bound exceeded: " + std::to_string(pts) + " points");
  }
  return pts;
}

}  // namespace

Variety zero_set(const EmbeddedSemiring& ctx, const PairSystem& t, const Congruence& rho,
                 const FunctionLimits& limits) {
  if (rho.n != ctx.target.n) throw DomainError("congruence owner mismatch");
  const long long pts = checked_space(ctx.target, t.arity, limits);
  std::vector<int> hits;
  for (int r = 0; r < pts; ++r) {
    const std::vector<int> p = rank_coords(r, ctx.target.n, t.arity);
    bool all = true;
    for (const auto& [f, g] : t.pairs)
      if (!rho.same(evaluate(f, p, ctx), evaluate(g, p, ctx))) {
        all = false;
        break;
      }
    if (all) hits.push_back(r);
  }
  return {t.arity, ctx.target.n, std::move(hits)};
}

Variety zero_set_of_generated(const FunctionSemiring& fs, const PairSystem& t,
                              const Congruence& rho) {
  if (t.arity != fs.arity) throw DomainError("pair system arity mismatch");
  std::vector<std::pair<int, int>> seeds;
  for (const auto& [f, g] : t.pairs) {
    const int fi = fs.id_of(f), gi = fs.id_of(g);
    if (fi < 0 || gi < 0) throw DomainError("system polynomial missing from function closure");
    seeds.emplace_back(fi, gi);
  }
  const Congruence sigma = generated_congruence_on_functions(fs, seeds);
  std::vector<int> hits;
  for (int r = 0; r < fs.num_points; ++r) {
    // P belongs iff every sigma-class evaluates into a single rho-class at P.
    std::vector<int> cls(sigma.num_classes(), -1);
    bool ok = true;
    for (int fid = 0; fid < fs.size() && ok; ++fid) {
      const int c = sigma.class_of[fid];
      const int v = rho.class_of[fs.tables[fid][r]];
      if (cls[c] == -1)
        cls[c] = v;
      else if (cls[c] != v)
        ok = false;
    }
    if (ok) hits.push_back(r);
  }
  return {fs.arity, fs.ctx.target.n, std::move(hits)};
}

PairSystem star_product(const Semiring& a, const PairSystem& t1, const PairSystem& t2) {
  if (t1.arity != t2.arity) throw DomainError("pair system arity mismatch");
  std::vector<PolyPair> pairs;
  for (const auto& p : t1.pairs)
    for (const auto& q : t2.pairs) pairs.push_back(poly_twisted_mul(a, p, q));
  return {t1.arity, std::move(pairs)};
}

StarUnionReport star_union(const EmbeddedSemiring& ctx, const PairSystem& t1,
                           const PairSystem& t2, const Congruence& rho,
                           const FunctionLimits& limits) {
  StarUnionReport rep;
  rep.z1 = zero_set(ctx, t1, rho, limits);
  rep.z2 = zero_set(ctx, t2, rho, limits);
  rep.z_star = zero_set(ctx, star_product(ctx.coeff, t1, t2), rho, limits);
  rep.rho_prime = classify(ctx.target, rho).prime;
  rep.equal = rep.z_star == variety_union(rep.z1, rep.z2);
  return rep;
}

VanishingCongruence vanishing(const FunctionSemiring& fs, const Variety& y,
                              const Congruence& rho) {
  if (y.arity != fs.arity || y.base != fs.ctx.target.n)
    throw DomainError("variety space mismatch");
  if (rho.n != fs.ctx.target.n) throw DomainError("congruence owner mismatch");
  VanishingCongruence v;
  v.ctx = fs.ctx;
  v.arity = fs.arity;
  v.rho = rho;
  v.y_points = y.points;
  v.num_functions = fs.size();
  // group functions by their rho-class signature over Y
  std::map<std::vector<int>, int> sig_ids;
  v.function_class.resize(fs.size());
  for (int fid = 0; fid < fs.size(); ++fid) {
    std::vector<int> sig;
    sig.reserve(y.points.size());
    for (int r : y.points) sig.push_back(rho.class_of[fs.tables[fid][r]]);
    const auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
    v.function_class[fid] = it->second;
  }
  v.num_function_classes = static_cast<int>(sig_ids.size());
  return v;
}

bool VanishingCongruence::contains(const PolyPair& p) const {
  if (p.first.num_vars != arity || p.second.num_vars != arity)
    throw DomainError("pair arity mismatch");
  for (int r : y_points) {
    const std::vector<int> coords = rank_coords(r, ctx.target.n, arity);
    if (!rho.same(evaluate(p.first, coords, ctx), evaluate(p.second, coords, ctx))) return false;
  }
  return true;
}

Variety closure_of(const FunctionSemiring& fs, const Variety& y, const Congruence& rho) {
  const VanishingCongruence v = vanishing(fs, y, rho);
  // P is in the closure iff every signature group takes a single rho-class
  // value at P.
  std::vector<int> hits;
  for (int r = 0; r < fs.num_points; ++r) {
    std::vector<int> cls(v.num_function_classes, -1);
    bool ok = true;
    for (int fid = 0; fid < fs.size() && ok; ++fid) {
      const int g = v.function_class[fid];
      const int c = rho.class_of[fs.tables[fid][r]];
      if (cls[g] == -1)
        cls[g] = c;
      else if (cls[g] != c)
        ok = false;
    }
    if (ok) hits.push_back(r);
  }
  return {fs.arity, fs.ctx.target.n, std::move(hits)};
}

bool Topology::is_closed(std::uint32_t mask) const {
  return std::binary_search(closed_masks.begin(), closed_masks.end(), mask);
}

std::uint32_t variety_mask(const Variety& y) {
  if (y.space_size() > 32) throw DomainError("variety too large for mask form");
  std::uint32_t m = 0;
  for (int p : y.points) m |= (1u << p);
  return m;
}

Variety variety_from_mask(int arity, int base, int num_points, std::uint32_t mask) {
  std::vector<int> pts;
  for (int i = 0; i < num_points; ++i)
    if (mask & (1u << i)) pts.push_back(i);
  return {arity, base, std::move(pts)};
}

namespace {

// Distinct restrictions of the closure functions to the given points.
std::set<std::vector<std::uint8_t>> restrictions(const FunctionSemiring& fs,
                                                 const std::vector<int>& pts) {
  std::set<std::vector<std::uint8_t>> out;
  for (int fid = 0; fid < fs.size(); ++fid) {
    std::vector<std::uint8_t> r;
    r.reserve(pts.size());
    for (int p : pts) r.push_back(fs.tables[fid][p]);
    out.insert(std::move(r));
  }
  return out;
}

bool restrictions_are_full(const FunctionSemiring& fs, const std::vector<int>& pts,
                           std::size_t count) {
  const double full = std::pow(static_cast<double>(fs.ctx.target.n),
                               static_cast<double>(pts.size()));
  return full <= 1e18 && static_cast<double>(count) == full;
}

}  // namespace

Topology materialize_topology(const FunctionSemiring& fs, const Congruence& rho,
                              int max_points) {
  if (fs.num_points > max_points || fs.num_points > 16)
    throw DomainError("topology bound exceeded: " + std::to_string(fs.num_points) + " points");
  if (!classify(fs.ctx.target, rho).prime)
    throw DomainError("the Zariski topology on B^n requires a prime congruence");

  std::set<std::uint32_t> family;
  const std::uint32_t full_mask = (1u << fs.num_points) - 1;

  // Base sets {P : (F(P), G(P)) in rho} depend only on the rho-class maps of
  // F and G, so pairing runs over the distinct reduced tables.
  std::set<std::vector<std::uint8_t>> reduced_set;
  for (int f = 0; f < fs.size(); ++f) {
    std::vector<std::uint8_t> r(fs.num_points);
    for (int p = 0; p < fs.num_points; ++p)
      r[p] = static_cast<std::uint8_t>(rho.class_of[fs.tables[f][p]]);
    reduced_set.insert(std::move(r));
  }
  const double full_reduced = std::pow(static_cast<double>(rho.num_classes()),
                                       static_cast<double>(fs.num_points));

  if (full_reduced <= 1e18 && static_cast<double>(reduced_set.size()) == full_reduced &&
      rho.num_classes() >= 2) {
    // Every class map is realizable pointwise, so every subset is a
    // single-pair zero set; the family is the full powerset.
    for (std::uint32_t m = 0; m <= full_mask; ++m) family.insert(m);
  } else {
    const std::vector<std::vector<std::uint8_t>> reduced(reduced_set.begin(), reduced_set.end());
    const long long pair_count = static_cast<long long>(reduced.size()) * reduced.size();
    if (pair_count > 4000000)
      throw DomainError("topology base-set scan too large: " + std::to_string(pair_count) +
                        " reduced function pairs");
    for (const auto& f : reduced)
      for (const auto& g : reduced) {
        std::uint32_t m = 0;
        for (int r = 0; r < fs.num_points; ++r)
          if (f[r] == g[r]) m |= (1u << r);
        family.insert(m);
      }
    family.insert(full_mask);  // Z of a diagonal pair
    // close under pairwise union and intersection
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<std::uint32_t> snapshot(family.begin(), family.end());
      for (std::size_t i = 0; i < snapshot.size(); ++i)
        for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
          changed |= family.insert(snapshot[i] | snapshot[j]).second;
          changed |= family.insert(snapshot[i] & snapshot[j]).second;
        }
      if (family.size() > 100000) throw DomainError("topology family grew past the bound");
    }
  }

  Topology t;
  t.arity = fs.arity;
  t.base = fs.ctx.target.n;
  t.num_points = fs.num_points;
  t.closed_masks.assign(family.begin(), family.end());
  return t;
}

bool is_irreducible(const Variety& y, const Topology& topo) {
  if (y.points.empty()) return false;
  if (y.points.size() == 1) return true;
  const std::uint32_t ymask = variety_mask(y);
  // proper relatively-closed subsets of Y
  std::set<std::uint32_t> rel;
  for (std::uint32_t c : topo.closed_masks) {
    const std::uint32_t m = c & ymask;
    if (m != ymask) rel.insert(m);
  }
  for (std::uint32_t m1 : rel) {
    const std::uint32_t need = ymask & ~m1;
    for (std::uint32_t m2 : rel)
      if ((m1 | m2) == ymask && need == (need & m2)) return false;
  }
  return true;
}

bool vanishing_is_prime(const FunctionSemiring& fs, const Variety& y, const Congruence& rho) {
  const Semiring& b = fs.ctx.target;
  if (y.points.empty()) return false;  // vanishing congruence is improper
  if (!is_proper(b, rho)) return false;

  const auto restr = restrictions(fs, y.points);
  const bool full = restrictions_are_full(fs, y.points, restr.size());

  if (full) {
    // Values at distinct points are independently realizable. A witness
    // against primality needs (u,v) with u*v in rho placed so that some
    // point breaks u and some point breaks v; with >= 2 points the two
    // breaks may sit at different points.
    bool joint_bad = false, left_bad = false;
    for (int ua = 0; ua < b.n; ++ua)
      for (int ub = 0; ub < b.n; ++ub)
        for (int va = 0; va < b.n; ++va)
          for (int vb = 0; vb < b.n; ++vb) {
            const Pair prod = twisted_mul(b, {ua, ub}, {va, vb});
            if (!rho.same(prod.a, prod.b)) continue;
            const bool ubad = !rho.same(ua, ub), vbad = !rho.same(va, vb);
            if (ubad && vbad) joint_bad = true;
            if (ubad) left_bad = true;
          }
    if (joint_bad) return false;
    if (y.points.size() >= 2 && left_bad) return false;
    return true;
  }

  const std::vector<std::vector<std::uint8_t>> reps(restr.begin(), restr.end());
  const std::size_t v = reps.size();
  if (v > 56)
    throw DomainError("vanishing primality scan too large: " + std::to_string(v) +
                      " distinct restrictions");
  const std::size_t pts = y.points.size();
  auto in_rho = [&](const std::vector<std::uint8_t>& f, const std::vector<std::uint8_t>& g) {
    for (std::size_t i = 0; i < pts; ++i)
      if (!rho.same(f[i], g[i])) return false;
    return true;
  };
  for (std::size_t f1 = 0; f1 < v; ++f1)
    for (std::size_t g1 = 0; g1 < v; ++g1) {
      if (in_rho(reps[f1], reps[g1])) continue;
      for (std::size_t f2 = 0; f2 < v; ++f2)
        for (std::size_t g2 = 0; g2 < v; ++g2) {
          if (in_rho(reps[f2], reps[g2])) continue;
          bool prod_in = true;
          for (std::size_t i = 0; i < pts && prod_in; ++i) {
            const Pair prod = twisted_mul(b, {reps[f1][i], reps[g1][i]},
                                          {reps[f2][i], reps[g2][i]});
            if (!rho.same(prod.a, prod.b)) prod_in = false;
          }
          if (prod_in) return false;
        }
    }
  return true;
}

SqrtOverResult sqrt_over(const FunctionSemiring& fs, const PairSystem& sigma_gens,
                         const Congruence& rho, int degree_cap) {
  if (degree_cap < 0) throw DomainError("a degree cap must be supplied");
  SqrtOverResult res;
  res.degree_cap = degree_cap;

  const Semiring& b = fs.ctx.target;
  const Semiring& a = fs.ctx.coeff;
  const Congruence sqrt_rho = radical(b, rho);
  // kernel of A -> B/sqrt(rho): the coefficientwise comparison congruence
  Congruence theta;
  theta.n = a.n;
  theta.class_of.resize(a.n);
  for (int x = 0; x < a.n; ++x) theta.class_of[x] = sqrt_rho.class_of[fs.ctx.embed[x]];
  theta.normalize();

  // sigma closed on the function semiring, then its radical there
  std::vector<std::pair<int, int>> seeds;
  for (const auto& [f, g] : sigma_gens.pairs) {
    const int fi = fs.id_of(f), gi = fs.id_of(g);
    if (fi < 0 || gi < 0) throw DomainError("system polynomial missing from function closure");
    seeds.emplace_back(fi, gi);
  }
  const Congruence sigma_fn = generated_congruence_on_functions(fs, seeds);
  const Semiring fn_table = as_semiring(fs);
  const Congruence sqrt_sigma = radical(fn_table, sigma_fn);

  res.polys = enumerate_polynomials(a, fs.arity, degree_cap);
  res.capped_polynomials = static_cast<long long>(res.polys.size());
  res.poly_function.resize(res.polys.size());
  res.theta_group.resize(res.polys.size());
  const std::vector<Monomial> mons = enumerate_monomials(fs.arity, degree_cap);
  std::map<std::vector<int>, int> group_ids;
  for (std::size_t i = 0; i < res.polys.size(); ++i) {
    res.poly_function[i] = fs.id_of(res.polys[i]);
    std::vector<int> sig;
    sig.reserve(mons.size());
    for (const Monomial& m : mons) sig.push_back(theta.class_of[res.polys[i].coeff(m, a.zero)]);
    const auto [it, fresh] = group_ids.emplace(std::move(sig), static_cast<int>(group_ids.size()));
    res.theta_group[i] = it->second;
  }

  // class sets of sqrt(sigma) reachable inside each coefficientwise group
  res.group_sqrt_sigma_classes.assign(group_ids.size(), {});
  for (std::size_t i = 0; i < res.polys.size(); ++i)
    res.group_sqrt_sigma_classes[res.theta_group[i]].push_back(
        sqrt_sigma.class_of[res.poly_function[i]]);
  for (auto& v : res.group_sqrt_sigma_classes) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // generated congruence on function ids: chain each theta group and each
  // sqrt(sigma) class restricted to the capped enumeration
  std::vector<std::pair<int, int>> gen_seeds;
  std::map<int, int> group_first, class_first;
  for (std::size_t i = 0; i < res.polys.size(); ++i) {
    const int g = res.theta_group[i];
    const auto [git, gfresh] = group_first.emplace(g, static_cast<int>(i));
    if (!gfresh) gen_seeds.emplace_back(res.poly_function[git->second], res.poly_function[i]);
    const int c = sqrt_sigma.class_of[res.poly_function[i]];
    const auto [cit, cfresh] = class_first.emplace(c, static_cast<int>(i));
    if (!cfresh) gen_seeds.emplace_back(res.poly_function[cit->second], res.poly_function[i]);
  }
  res.generated = generated_congruence_on_functions(fs, gen_seeds);

  long long count = 0;
  for (std::size_t i = 0; i < res.polys.size(); ++i)
    for (std::size_t j = 0; j < res.polys.size(); ++j)
      if (res.relation_contains(static_cast<int>(i), static_cast<int>(j))) ++count;
  res.relation_pairs = count;
  return res;
}

bool SqrtOverResult::relation_contains(int i, int j) const {
  const auto& s1 = group_sqrt_sigma_classes[theta_group[i]];
  const auto& s2 = group_sqrt_sigma_classes[theta_group[j]];
  // membership iff some sqrt(sigma) class is reachable from both sides
  auto a = s1.begin();
  auto b = s2.begin();
  while (a != s1.end() && b != s2.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

NullstellensatzReport nullstellensatz_check(const FunctionSemiring& fs,
                                            const PairSystem& sigma_gens, const Congruence& rho,
                                            int degree_cap) {
  NullstellensatzReport rep;
  rep.degree_cap = degree_cap;
  const SqrtOverResult so = sqrt_over(fs, sigma_gens, rho, degree_cap);
  const Congruence sqrt_rho = radical(fs.ctx.target, rho);
  const Variety z = zero_set(fs.ctx, sigma_gens, rho,
                             FunctionLimits{fs.num_points, 25000});
  // sqrt(rho)-class signature of each capped polynomial over Z
  std::map<std::vector<int>, int> sig_ids;
  std::vector<int> sig(so.polys.size());
  for (std::size_t i = 0; i < so.polys.size(); ++i) {
    std::vector<int> s;
    s.reserve(z.points.size());
    for (int r : z.points) s.push_back(sqrt_rho.class_of[fs.tables[so.poly_function[i]][r]]);
    const auto [it, fresh] = sig_ids.emplace(std::move(s), static_cast<int>(sig_ids.size()));
    sig[i] = it->second;
  }

  rep.inclusion_holds = true;
  rep.equality_holds = true;
  const int n = static_cast<int>(so.polys.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ++rep.pairs_checked;
      const bool lhs_relation = so.relation_contains(i, j);
      const bool lhs_generated =
          so.generated.same(so.poly_function[i], so.poly_function[j]);
      const bool rhs = sig[i] == sig[j];
      if ((lhs_relation || lhs_generated) && !rhs) {
        rep.inclusion_holds = false;
        if (rep.witnesses.size() < 3)
          rep.witnesses.push_back(print_polynomial(so.polys[i], fs.ctx.coeff) + " ~ " +
                                  print_polynomial(so.polys[j], fs.ctx.coeff));
      }
      if (rhs && !lhs_generated) {
        rep.equality_holds = false;
        if (rep.witnesses.size() < 3)
          rep.witnesses.push_back("missing: " + print_polynomial(so.polys[i], fs.ctx.coeff) +
                                  " ~ " + print_polynomial(so.polys[j], fs.ctx.coeff));
      }
    }
  return rep;
}

HomCountReport hom_count(const EmbeddedSemiring& ctx, const PairSystem& t, const Congruence& rho,
                         const FunctionLimits& limits) {
  HomCountReport rep;
  const Variety z = zero_set(ctx, t, rho, limits);
  // side one: class tuples of the zero set
  std::set<std::vector<int>> class_tuples;
  for (int r : z.points) {
    std::vector<int> coords = rank_coords(r, ctx.target.n, t.arity);
    for (int& c : coords) c = rho.class_of[c];
    class_tuples.insert(std::move(coords));
  }
  rep.points = static_cast<long long>(class_tuples.size());

  // side two: assignments over the quotient satisfying every pair there
  const QuotientResult q = quotient(ctx.target, rho);
  std::vector<int> quotient_embed(ctx.coeff.n);
  for (int a = 0; a < ctx.coeff.n; ++a) quotient_embed[a] = q.projection[ctx.embed[a]];
  const EmbeddedSemiring qctx{ctx.coeff, q.table, quotient_embed};
  long long space = 1;
  for (int i = 0; i < t.arity; ++i) space *= q.table.n;
  for (long long r = 0; r < space; ++r) {
    std::vector<int> tuple(t.arity);
    long long rr = r;
    for (int i = 0; i < t.arity; ++i) {
      tuple[i] = static_cast<int>(rr % q.table.n);
      rr /= q.table.n;
    }
    bool all = true;
    for (const auto& [f, g] : t.pairs)
      if (evaluate(f, tuple, qctx) != evaluate(g, tuple, qctx)) {
        all = false;
        break;
      }
    if (all) {
      rep.assignments.push_back(tuple);
      ++rep.homs;
    }
  }
  return rep;
}

}  // namespace semicong
