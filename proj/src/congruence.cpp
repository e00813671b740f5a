#include "semicong/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "semicong/errors.hpp"

namespace semicong {

Congruence Congruence::identity(int n) {
  Congruence c;
  c.n = n;
  c.class_of.resize(n);
  std::iota(c.class_of.begin(), c.class_of.end(), 0);
  return c;
}

Congruence Congruence::full(int n) {
  Congruence c;
  c.n = n;
  c.class_of.assign(n, 0);
  return c;
}

Congruence Congruence::from_partition(int n, const std::vector<std::vector<int>>& classes) {
  Congruence c;
  c.n = n;
  c.class_of.assign(n, -1);
  int next = 0;
  for (const auto& cls : classes) {
    if (cls.empty()) throw DomainError("partition has an empty class");
    for (int e : cls) {
      if (e < 0 || e >= n) throw DomainError("partition element out of range");
      if (c.class_of[e] != -1) throw DomainError("partition repeats an element");
      c.class_of[e] = next;
    }
    ++next;
  }
  for (int e = 0; e < n; ++e)
    if (c.class_of[e] == -1) throw DomainError("partition misses an element");
  c.normalize();
  return c;
}

std::optional<Congruence> Congruence::from_relation_if_equivalence(const Relation& r) {
  if (!is_equivalence(r)) return std::nullopt;
  Congruence c;
  c.n = r.n;
  c.class_of.assign(r.n, -1);
  for (int a = 0; a < r.n; ++a) {
    if (c.class_of[a] != -1) continue;
    for (int b = a; b < r.n; ++b)
      if (r.contains(a, b)) c.class_of[b] = a;
  }
  c.normalize();
  return c;
}

int Congruence::num_classes() const {
  int m = -1;
  for (int c : class_of) m = std::max(m, c);
  return m + 1;
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::vector<std::vector<int>> out(num_classes());
  for (int e = 0; e < n; ++e) out[class_of[e]].push_back(e);
  return out;
}

Relation Congruence::to_relation() const {
  Relation r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (same(a, b)) r.insert(a, b);
  return r;
}

bool Congruence::subset_of(const Congruence& o) const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (same(a, b) && !o.same(a, b)) return false;
  return true;
}

void Congruence::normalize() {
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    int& slot = remap[class_of[e]];
    if (slot == -1) slot = next++;
    class_of[e] = slot;
  }
}

bool is_proper(const Semiring& a, const Congruence& rho) { return !rho.same(a.one, a.zero); }

bool is_congruence(const Semiring& s, const Congruence& rho) {
  for (int a = 0; a < s.n; ++a)
    for (int b = a + 1; b < s.n; ++b) {
      if (!rho.same(a, b)) continue;
      for (int c = 0; c < s.n; ++c) {
        if (!rho.same(s.add(a, c), s.add(b, c))) return false;
        if (!rho.same(s.mul(a, c), s.mul(b, c))) return false;
      }
    }
  return true;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller id as representative so results are canonical.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

Congruence dsu_to_congruence(Dsu& d, int n) {
  Congruence c;
  c.n = n;
  c.class_of.resize(n);
  for (int e = 0; e < n; ++e) c.class_of[e] = d.find(e);
  c.normalize();
  return c;
}

}  // namespace

Congruence generated_congruence(const Semiring& s, const Relation& r) {
  if (r.n != s.n) throw DomainError("relation carrier mismatch");
  Dsu d(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (r.contains(a, b)) d.unite(a, b);
  // Propagate through representatives until stable; at the fixpoint every
  // a ~ rep(a) pair is compatible, which gives compatibility of all pairs
  // by transitivity through the representative.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < s.n; ++b) {
      const int a = d.find(b);
      if (a == b) continue;
      for (int c = 0; c < s.n; ++c) {
        changed |= d.unite(s.add(a, c), s.add(b, c));
        changed |= d.unite(s.mul(a, c), s.mul(b, c));
      }
    }
  }
  return dsu_to_congruence(d, s.n);
}

std::optional<WitnessChain> witness_chain(const Semiring& s, const Relation& r, Pair p) {
  if (p.a == p.b) return WitnessChain{{p.a}, {}};
  const Relation rl = translate_saturate(s, r);
  // BFS over elements; edges are R^L steps taken forwards or backwards.
  std::vector<int> prev(s.n, -1);
  std::vector<bool> prev_fwd(s.n, false);
  std::vector<bool> seen(s.n, false);
  std::deque<int> queue{p.a};
  seen[p.a] = true;
  while (!queue.empty() && !seen[p.b]) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < s.n; ++v) {
      if (seen[v]) continue;
      const bool fwd = rl.contains(u, v);
      if (!fwd && !rl.contains(v, u)) continue;
      seen[v] = true;
      prev[v] = u;
      prev_fwd[v] = fwd;
      queue.push_back(v);
    }
  }
  if (!seen[p.b]) return std::nullopt;
  WitnessChain ch;
  for (int v = p.b; v != -1; v = prev[v]) {
    ch.nodes.push_back(v);
    if (prev[v] != -1) ch.forward.push_back(prev_fwd[v]);
  }
  std::reverse(ch.nodes.begin(), ch.nodes.end());
  std::reverse(ch.forward.begin(), ch.forward.end());
  return ch;
}

bool verify_witness_chain(const Semiring& s, const Relation& r, Pair p, const WitnessChain& ch) {
  if (ch.nodes.empty() || ch.nodes.front() != p.a || ch.nodes.back() != p.b) return false;
  if (ch.forward.size() + 1 != ch.nodes.size()) return false;
  if (ch.nodes.size() == 1) return p.a == p.b;
  const Relation rl = translate_saturate(s, r);
  for (std::size_t i = 0; i + 1 < ch.nodes.size(); ++i) {
    const int u = ch.nodes[i], v = ch.nodes[i + 1];
    if (ch.forward[i] ? !rl.contains(u, v) : !rl.contains(v, u)) return false;
  }
  return true;
}

std::vector<Congruence> enumerate_congruences(const Semiring& s, int max_size) {
  if (s.n > max_size)
    throw DomainError("congruence enumeration refused: carrier size " + std::to_string(s.n) +
                      " exceeds bound " + std::to_string(max_size) +
                      " (raise --max-size to override)");
  std::vector<Congruence> out;
  std::vector<int> rgs(s.n, 0);
  // Restricted growth strings enumerate set partitions in lexicographic
  // order of the class_of vector, which is already the canonical order.
  while (true) {
    Congruence cand;
    cand.n = s.n;
    cand.class_of = rgs;
    if (is_congruence(s, cand)) out.push_back(cand);
    int i = s.n - 1;
    for (; i > 0; --i) {
      int maxprev = 0;
      for (int j = 0; j < i; ++j) maxprev = std::max(maxprev, rgs[j]);
      if (rgs[i] <= maxprev) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

namespace {
void check_owner(const Semiring& s, const Congruence& rho) {
  if (rho.n != s.n) throw DomainError("congruence owner mismatch");
}
}  // namespace

Congruence meet(const Semiring& s, const Congruence& rho, const Congruence& sigma) {
  check_owner(s, rho);
  check_owner(s, sigma);
  Congruence c;
  c.n = s.n;
  c.class_of.resize(s.n);
  std::vector<std::pair<int, int>> key(s.n);
  for (int e = 0; e < s.n; ++e) key[e] = {rho.class_of[e], sigma.class_of[e]};
  for (int e = 0; e < s.n; ++e) {
    int id = 0;
    for (; id < e; ++id)
      if (key[id] == key[e]) break;
    c.class_of[e] = id;
  }
  c.normalize();
  return c;
}

Congruence join(const Semiring& s, const Congruence& rho, const Congruence& sigma) {
  check_owner(s, rho);
  check_owner(s, sigma);
  const Relation composed = compose(rho.to_relation(), sigma.to_relation());
  auto eq = Congruence::from_relation_if_equivalence(transitive_closure(composed));
  if (!eq) throw DomainError("join of congruences failed to close");  // cannot happen
  return *eq;
}

Congruence congruence_plus(const Semiring& s, const Congruence& rho) {
  check_owner(s, rho);
  auto eq = Congruence::from_relation_if_equivalence(plus_saturate(s, rho.to_relation()));
  if (!eq) throw DomainError("plus saturation of a congruence is not an equivalence");
  return *eq;
}

namespace {

// For every pair u in the pair space, whether some twisted power u^{*n}
// (n >= 1) satisfies hit(u^{*n}). Walks each orbit with a visited set.
std::vector<char> power_orbit_hits(const Semiring& s, const std::vector<char>& hit) {
  const int m = s.n * s.n;
  std::vector<char> result(m, 0);
  std::vector<int> visited(m, -1);
  for (int start = 0; start < m; ++start) {
    const Pair u = pair_from_id(s, start);
    Pair cur = u;
    bool found = false;
    while (visited[pair_id(s, cur)] != start) {
      visited[pair_id(s, cur)] = start;
      if (hit[pair_id(s, cur)]) {
        found = true;
        break;
      }
      cur = twisted_mul(s, cur, u);
    }
    result[start] = found;
  }
  return result;
}

std::vector<char> membership_table(const Congruence& rho, int n) {
  std::vector<char> in(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rho.same(a, b)) in[a * n + b] = 1;
  return in;
}

}  // namespace

Congruence radical(const Semiring& s, const Congruence& rho) {
  check_owner(s, rho);
  const std::vector<char> in_rho = membership_table(rho, s.n);
  const std::vector<char> hits = power_orbit_hits(s, in_rho);
  Relation rel(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      for (int c = 0; c < s.n; ++c)
        if (hits[pair_id(s, {s.add(a, c), s.add(b, c)})]) {
          rel.insert(a, b);
          break;
        }
  auto eq = Congruence::from_relation_if_equivalence(rel);
  if (!eq) throw DomainError("radical is not an equivalence");
  return *eq;
}

Congruence radical_alt(const Semiring& s, const Congruence& rho) {
  check_owner(s, rho);
  // (a,b)^{*n} + (c,c) in rho for some c is exactly membership of the n-th
  // power in rho_+.
  const Congruence rho_plus = congruence_plus(s, rho);
  const std::vector<char> in_plus = membership_table(rho_plus, s.n);
  const std::vector<char> hits = power_orbit_hits(s, in_plus);
  Relation rel(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (hits[pair_id(s, {a, b})]) rel.insert(a, b);
  auto eq = Congruence::from_relation_if_equivalence(rel);
  if (!eq) throw DomainError("radical_alt is not an equivalence");
  return *eq;
}

NilReport nil_relations(const Semiring& s) {
  NilReport rep;
  const Congruence id = Congruence::identity(s.n);
  const std::vector<char> diag = membership_table(id, s.n);
  const std::vector<char> hits = power_orbit_hits(s, diag);
  rep.r_nil = Relation(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b)
      if (hits[pair_id(s, {a, b})]) rep.r_nil.insert(a, b);
  auto plus = Congruence::from_relation_if_equivalence(plus_saturate(s, rep.r_nil));
  if (!plus) throw DomainError("rho_nil is not an equivalence");
  rep.rho_nil = *plus;
  rep.quasi_nil = generated_congruence(s, rep.r_nil);
  rep.reduced = rep.r_nil == Relation::identity(s.n);
  rep.strongly_reduced = rep.rho_nil == Congruence::identity(s.n);
  return rep;
}

Congruence flat(const Semiring& s, const Congruence& e) {
  check_owner(s, e);
  Relation rel(s.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < s.n; ++b) {
      bool all = true;
      for (int x = 0; x < s.n && all; ++x)
        for (int y = 0; y < s.n; ++y)
          if (!e.same(s.add(s.mul(a, x), y), s.add(s.mul(b, x), y))) {
            all = false;
            break;
          }
      if (all) rel.insert(a, b);
    }
  auto eq = Congruence::from_relation_if_equivalence(rel);
  if (!eq) throw DomainError("flat of an equivalence is not an equivalence");
  return *eq;
}

}  // namespace semicong
