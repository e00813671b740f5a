#include "semicong/function_semiring.hpp"

#include <algorithm>
#include <numeric>

#include "semicong/errors.hpp"

namespace semicong {

namespace {

std::string table_key(const std::vector<std::uint8_t>& t) {
  return std::string(reinterpret_cast<const char*>(t.data()), t.size());
}

}  // namespace

int FunctionSemiring::find(const std::vector<std::uint8_t>& table) const {
  const auto it = index_.find(table_key(table));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::uint8_t> FunctionSemiring::table_of(const Polynomial& f) const {
  if (f.num_vars != arity) throw DomainError("polynomial arity mismatch");
  std::vector<std::uint8_t> t(num_points);
  for (int r = 0; r < num_points; ++r) {
    const std::vector<int> p = point_coords(r);
    t[r] = static_cast<std::uint8_t>(evaluate(f, p, ctx));
  }
  return t;
}

int FunctionSemiring::id_of(const Polynomial& f) const { return find(table_of(f)); }

int FunctionSemiring::add_fn(int f, int g) const {
  std::vector<std::uint8_t> t(num_points);
  for (int r = 0; r < num_points; ++r)
    t[r] = static_cast<std::uint8_t>(ctx.target.add(tables[f][r], tables[g][r]));
  const int id = find(t);
  if (id < 0) throw DomainError("function semiring closure is missing a sum");
  return id;
}

int FunctionSemiring::mul_fn(int f, int g) const {
  std::vector<std::uint8_t> t(num_points);
  for (int r = 0; r < num_points; ++r)
    t[r] = static_cast<std::uint8_t>(ctx.target.mul(tables[f][r], tables[g][r]));
  const int id = find(t);
  if (id < 0) throw DomainError("function semiring closure is missing a product");
  return id;
}

int FunctionSemiring::const_fn(int coeff_id) const {
  const std::vector<std::uint8_t> t(num_points,
                                    static_cast<std::uint8_t>(ctx.embed[coeff_id]));
  const int id = find(t);
  if (id < 0) throw DomainError("function semiring closure is missing a constant");
  return id;
}

std::vector<int> FunctionSemiring::point_coords(int rank) const {
  std::vector<int> coords(arity);
  const int m = ctx.target.n;
  for (int i = 0; i < arity; ++i) {
    coords[i] = rank % m;
    rank /= m;
  }
  return coords;
}

int FunctionSemiring::point_rank(std::span<const int> coords) const {
  const int m = ctx.target.n;
  int rank = 0;
  for (int i = arity - 1; i >= 0; --i) rank = rank * m + coords[i];
  return rank;
}

namespace {

// Lagrange-style interpolation witness over a finite field: the indicator of
// a point is built from products of (x_i + negatives of other carrier
// values), normalized by the inverse of its value at the point.
Polynomial field_indicator(const Semiring& b, std::span<const int> coords, int arity) {
  auto negate = [&b](int x) {
    for (int y = 0; y < b.n; ++y)
      if (b.add(x, y) == b.zero) return y;
    throw DomainError("field element without additive inverse");
  };
  auto invert = [&b](int x) {
    for (int y = 0; y < b.n; ++y)
      if (b.mul(x, y) == b.one) return y;
    throw DomainError("field element without multiplicative inverse");
  };
  Polynomial ind = Polynomial::constant(b, b.one, arity);
  int scale = b.one;
  for (int i = 0; i < arity; ++i)
    for (int c = 0; c < b.n; ++c) {
      if (c == coords[i]) continue;
      // factor (x_i + (-c)); value at the point is coords[i] - c
      Polynomial factor = Polynomial::variable(i, arity, b.one);
      factor = poly_add(b, factor, Polynomial::constant(b, negate(c), arity));
      ind = poly_mul(b, ind, factor);
      scale = b.mul(scale, b.add(coords[i], negate(c)));
    }
  ind = poly_mul(b, ind, Polynomial::constant(b, invert(scale), arity));
  return ind;
}

}  // namespace

FunctionSemiring function_semiring(const EmbeddedSemiring& ctx, int arity,
                                   const FunctionLimits& limits) {
  if (arity < 0) throw DomainError("negative arity");
  FunctionSemiring fs;
  fs.ctx = ctx;
  fs.arity = arity;
  long long pts = 1;
  for (int i = 0; i < arity; ++i) {
    pts *= ctx.target.n;
    if (pts > limits.max_points)
      throw DomainError("function semiring bound exceeded: " + std::to_string(pts) +
                        " points over limit " + std::to_string(limits.max_points));
  }
  fs.num_points = static_cast<int>(pts);
  if (ctx.target.n > 255) throw DomainError("target semiring too large for point tables");

  auto push = [&fs](std::vector<std::uint8_t> t, Polynomial w) {
    const std::string key = table_key(t);
    if (fs.index_.count(key)) return false;
    fs.index_.emplace(key, fs.size());
    fs.tables.push_back(std::move(t));
    fs.witnesses.push_back(std::move(w));
    return true;
  };

  const Semiring& b = ctx.target;
  // The direct full-space construction needs coefficient ids and target ids
  // to coincide, so it is taken only for the identity embedding.
  bool identity_embed = ctx.coeff.same_structure(b);
  for (int a = 0; identity_embed && a < ctx.coeff.n; ++a)
    if (ctx.embed[a] != a) identity_embed = false;
  if (is_field(b) && identity_embed && arity >= 1) {
    // Full function space: every table is polynomial over a finite field.
    double total = 1;
    for (int r = 0; r < fs.num_points; ++r) total *= b.n;
    if (total > limits.max_functions)
      throw DomainError("function semiring bound exceeded: full field space has " +
                        std::to_string(total) + " functions");
    // witnesses: sum of point indicators scaled by the target value
    std::vector<Polynomial> indicators(fs.num_points);
    for (int r = 0; r < fs.num_points; ++r) {
      std::vector<int> coords(arity);
      int rr = r;
      for (int i = 0; i < arity; ++i) {
        coords[i] = rr % b.n;
        rr /= b.n;
      }
      indicators[r] = field_indicator(b, coords, arity);
    }
    std::vector<std::uint8_t> t(fs.num_points, 0);
    while (true) {
      Polynomial w = Polynomial::zero(arity);
      for (int r = 0; r < fs.num_points; ++r)
        if (t[r] != static_cast<std::uint8_t>(b.zero))
          w = poly_add(b, w,
                       poly_mul(b, Polynomial::constant(b, t[r], arity), indicators[r]));
      push(t, std::move(w));
      int i = 0;
      for (; i < fs.num_points; ++i) {
        if (t[i] + 1 < b.n) {
          ++t[i];
          break;
        }
        t[i] = 0;
      }
      if (i == fs.num_points) break;
    }
    return fs;
  }

  // Worklist closure from constants and projections under pointwise + and *.
  for (int a = 0; a < ctx.coeff.n; ++a) {
    std::vector<std::uint8_t> t(fs.num_points, static_cast<std::uint8_t>(ctx.embed[a]));
    push(std::move(t), Polynomial::constant(ctx.coeff, a, arity));
  }
  for (int i = 0; i < arity; ++i) {
    std::vector<std::uint8_t> t(fs.num_points);
    for (int r = 0; r < fs.num_points; ++r)
      t[r] = static_cast<std::uint8_t>(fs.point_coords(r)[i]);
    push(std::move(t), Polynomial::variable(i, arity, ctx.coeff.one));
  }

  for (int k = 0; k < fs.size(); ++k) {
    for (int j = 0; j <= k; ++j) {
      if (fs.size() > limits.max_functions)
        throw DomainError("function semiring bound exceeded: closure passed " +
                          std::to_string(limits.max_functions) + " functions");
      std::vector<std::uint8_t> sum(fs.num_points), prod(fs.num_points);
      for (int r = 0; r < fs.num_points; ++r) {
        sum[r] = static_cast<std::uint8_t>(b.add(fs.tables[j][r], fs.tables[k][r]));
        prod[r] = static_cast<std::uint8_t>(b.mul(fs.tables[j][r], fs.tables[k][r]));
      }
      push(std::move(sum), poly_add(ctx.coeff, fs.witnesses[j], fs.witnesses[k]));
      push(std::move(prod), poly_mul(ctx.coeff, fs.witnesses[j], fs.witnesses[k]));
    }
  }
  return fs;
}

Semiring as_semiring(const FunctionSemiring& fs, int max_size) {
  const int m = fs.size();
  if (m > max_size)
    throw DomainError("function semiring too large to tabulate: " + std::to_string(m));
  Semiring s;
  s.n = m;
  s.name = "functions(" + fs.ctx.target.name + "^" + std::to_string(fs.arity) + ")";
  s.zero = fs.const_fn(fs.ctx.coeff.zero);
  s.one = fs.const_fn(fs.ctx.coeff.one);
  s.add_tab.assign(static_cast<std::size_t>(m) * m, 0);
  s.mul_tab.assign(static_cast<std::size_t>(m) * m, 0);
  s.elem_names.resize(m);
  for (int i = 0; i < m; ++i) s.elem_names[i] = "f" + std::to_string(i);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      s.add_tab[i * m + j] = fs.add_fn(i, j);
      s.mul_tab[i * m + j] = fs.mul_fn(i, j);
    }
  return s;
}

Congruence generated_congruence_on_functions(const FunctionSemiring& fs,
                                             const std::vector<std::pair<int, int>>& seeds) {
  const int m = fs.size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  };
  for (const auto& [a, b] : seeds) unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      const int r = find(x);
      if (r == x) continue;
      for (int c = 0; c < m; ++c) {
        changed |= unite(fs.add_fn(r, c), fs.add_fn(x, c));
        changed |= unite(fs.mul_fn(r, c), fs.mul_fn(x, c));
      }
    }
  }
  Congruence out;
  out.n = m;
  out.class_of.resize(m);
  for (int x = 0; x < m; ++x) out.class_of[x] = find(x);
  out.normalize();
  return out;
}

}  // namespace semicong
