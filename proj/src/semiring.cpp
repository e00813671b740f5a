#include "semicong/semiring.hpp"

#include <algorithm>

#include "semicong/errors.hpp"

namespace semicong {

int Semiring::pow(int a, int k) const {
  int r = one;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int Semiring::nat_times(int k, int x) const {
  int r = zero;
  for (int i = 0; i < k; ++i) r = add(r, x);
  return r;
}

int Semiring::elem_by_name(const std::string& s) const {
  for (int i = 0; i < n; ++i)
    if (elem_names[i] == s) return i;
  return -1;
}

namespace {

void check_shape(const Semiring& a) {
  const std::size_t nn = static_cast<std::size_t>(a.n) * a.n;
  if (a.n <= 0 || a.add_tab.size() != nn || a.mul_tab.size() != nn)
    throw DomainError("malformed semiring table: wrong table shape");
  if (a.zero < 0 || a.zero >= a.n || a.one < 0 || a.one >= a.n)
    throw DomainError("malformed semiring table: zero/one id out of range");
  for (int v : a.add_tab)
    if (v < 0 || v >= a.n) throw DomainError("malformed semiring table: add entry out of range");
  for (int v : a.mul_tab)
    if (v < 0 || v >= a.n) throw DomainError("malformed semiring table: mul entry out of range");
}

}  // namespace

AxiomReport validate_axioms(const Semiring& a) {
  check_shape(a);
  AxiomReport rep;
  auto fail = [&rep](const std::string& axiom, std::vector<int> w) {
    rep.violations.push_back({axiom, std::move(w)});
  };

  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (a.add(x, y) != a.add(y, x)) fail("+comm", {x, y});
      if (a.mul(x, y) != a.mul(y, x)) fail("*comm", {x, y});
      for (int z = 0; z < a.n; ++z) {
        if (a.add(a.add(x, y), z) != a.add(x, a.add(y, z))) fail("+assoc", {x, y, z});
        if (a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z))) fail("*assoc", {x, y, z});
        if (a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)))
          fail("left-distrib", {x, y, z});
        if (a.mul(a.add(x, y), z) != a.add(a.mul(x, z), a.mul(y, z)))
          fail("right-distrib", {x, y, z});
      }
    }
  for (int x = 0; x < a.n; ++x) {
    if (a.add(a.zero, x) != x) fail("+identity", {x});
    if (a.mul(a.one, x) != x) fail("*identity", {x});
    if (a.mul(a.zero, x) != a.zero) fail("0-absorption", {x});
  }
  if (a.one == a.zero) fail("one!=zero", {});

  rep.passed = rep.violations.empty();
  return rep;
}

SemiringFlags classify_semiring(const Semiring& a) {
  SemiringFlags f;
  f.semidomain = true;
  for (int x = 0; x < a.n && f.semidomain; ++x)
    for (int y = 0; y < a.n; ++y)
      if (x != a.zero && y != a.zero && a.mul(x, y) == a.zero) {
        f.semidomain = false;
        break;
      }

  f.semifield = f.semidomain;
  if (f.semifield) {
    for (int x = 0; x < a.n && f.semifield; ++x) {
      if (x == a.zero) continue;
      bool inv = false;
      for (int y = 0; y < a.n; ++y)
        if (y != a.zero && a.mul(x, y) == a.one) {
          inv = true;
          break;
        }
      if (!inv) f.semifield = false;
    }
  }

  f.additive_annihilation = true;
  for (int x = 0; x < a.n && f.additive_annihilation; ++x)
    for (int y = 0; y < a.n && f.additive_annihilation; ++y)
      for (int z = 0; z < a.n; ++z)
        if (x != y && a.add(x, z) == a.add(y, z)) {
          f.additive_annihilation = false;
          break;
        }

  f.additively_idempotent = true;
  for (int x = 0; x < a.n; ++x)
    if (a.add(x, x) != x) {
      f.additively_idempotent = false;
      break;
    }
  return f;
}

bool is_field(const Semiring& a) {
  SemiringFlags f = classify_semiring(a);
  if (!f.semifield) return false;
  for (int x = 0; x < a.n; ++x) {
    bool neg = false;
    for (int y = 0; y < a.n; ++y)
      if (a.add(x, y) == a.zero) {
        neg = true;
        break;
      }
    if (!neg) return false;
  }
  return true;
}

namespace {

Semiring blank(int n, const std::string& name) {
  Semiring a;
  a.n = n;
  a.name = name;
  a.add_tab.assign(static_cast<std::size_t>(n) * n, 0);
  a.mul_tab.assign(static_cast<std::size_t>(n) * n, 0);
  a.elem_names.resize(n);
  for (int i = 0; i < n; ++i) a.elem_names[i] = std::to_string(i);
  return a;
}

}  // namespace

Semiring make_boolean() {
  Semiring a = blank(2, "boolean");
  a.zero = 0;
  a.one = 1;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      a.add_tab[x * 2 + y] = (x || y) ? 1 : 0;
      a.mul_tab[x * 2 + y] = (x && y) ? 1 : 0;
    }
  return a;
}

Semiring make_zmod(int n) {
  if (n < 2) throw DomainError("zmod requires modulus >= 2");
  Semiring a = blank(n, "zmod" + std::to_string(n));
  a.zero = 0;
  a.one = 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.add_tab[x * n + y] = (x + y) % n;
      a.mul_tab[x * n + y] = (x * y) % n;
    }
  return a;
}

Semiring make_truncated_nat(int k) {
  if (k < 1) throw DomainError("truncated_nat requires bound >= 1");
  const int n = k + 1;
  Semiring a = blank(n, "truncated_nat" + std::to_string(k));
  a.zero = 0;
  a.one = 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.add_tab[x * n + y] = std::min(x + y, k);
      a.mul_tab[x * n + y] = std::min(x * y, k);
    }
  return a;
}

Semiring make_minplus_chain(int k) {
  if (k < 1) throw DomainError("minplus_chain requires bound >= 1");
  // id 0 is the infinity element; id i (1 <= i <= k+1) is the value i-1.
  const int n = k + 2;
  Semiring a = blank(n, "minplus_chain" + std::to_string(k));
  a.zero = 0;
  a.one = 1;
  a.elem_names[0] = "inf";
  for (int i = 1; i < n; ++i) a.elem_names[i] = std::to_string(i - 1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == 0)
        a.add_tab[x * n + y] = y;
      else if (y == 0)
        a.add_tab[x * n + y] = x;
      else
        a.add_tab[x * n + y] = std::min(x, y);
      if (x == 0 || y == 0)
        a.mul_tab[x * n + y] = 0;
      else
        a.mul_tab[x * n + y] = std::min((x - 1) + (y - 1), k) + 1;
    }
  return a;
}

Semiring make_builtin(const std::string& kind, int param) {
  if (kind == "boolean") return make_boolean();
  if (kind == "zmod") return make_zmod(param);
  if (kind == "truncated_nat") return make_truncated_nat(param);
  if (kind == "minplus_chain") return make_minplus_chain(param);
  throw DomainError("unknown builtin semiring kind: " + kind);
}

Semiring pair_semiring(const Semiring& a) {
  const int n = a.n;
  Semiring p = blank(n * n, a.name + " x " + a.name);
  p.zero = a.zero * n + a.zero;
  p.one = a.one * n + a.zero;
  for (int i = 0; i < n * n; ++i)
    p.elem_names[i] = "(" + a.elem_name(i / n) + "," + a.elem_name(i % n) + ")";
  const int m = n * n;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int xa = x / n, xb = x % n, ya = y / n, yb = y % n;
      p.add_tab[x * m + y] = a.add(xa, ya) * n + a.add(xb, yb);
      p.mul_tab[x * m + y] =
          a.add(a.mul(xa, ya), a.mul(xb, yb)) * n + a.add(a.mul(xa, yb), a.mul(xb, ya));
    }
  return p;
}

bool ideal_check(const Semiring& a, const std::vector<int>& members) {
  std::vector<char> in(a.n, 0);
  for (int m : members) {
    if (m < 0 || m >= a.n) throw DomainError("ideal member out of range");
    in[m] = 1;
  }
  if (!in[a.zero]) return false;
  for (int x = 0; x < a.n; ++x) {
    if (!in[x]) continue;
    for (int y = 0; y < a.n; ++y) {
      if (in[y] && !in[a.add(x, y)]) return false;
      if (!in[a.mul(x, y)]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> enumerate_ideals(const Semiring& a) {
  if (a.n > 20) throw DomainError("ideal enumeration bound exceeded");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << a.n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < a.n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    if (!members.empty() && ideal_check(a, members)) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Semiring apply_isomorphism(const Semiring& a, const std::vector<int>& pi) {
  Semiring b = a;
  b.zero = pi[a.zero];
  b.one = pi[a.one];
  for (int x = 0; x < a.n; ++x) {
    b.elem_names[pi[x]] = a.elem_names[x];
    for (int y = 0; y < a.n; ++y) {
      b.add_tab[pi[x] * a.n + pi[y]] = pi[a.add(x, y)];
      b.mul_tab[pi[x] * a.n + pi[y]] = pi[a.mul(x, y)];
    }
  }
  return b;
}

}  // namespace semicong
