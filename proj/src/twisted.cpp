#include "semicong/twisted.hpp"

#include "semicong/errors.hpp"

namespace semicong {

Pair twisted_mul(const Semiring& s, Pair p, Pair q) {
  return {s.add(s.mul(p.a, q.a), s.mul(p.b, q.b)), s.add(s.mul(p.a, q.b), s.mul(p.b, q.a))};
}

Pair twisted_pow(const Semiring& s, Pair p, int n) {
  if (n < 0) throw DomainError("twisted_pow: negative exponent");
  Pair r{s.one, s.zero};
  for (int i = 0; i < n; ++i) r = twisted_mul(s, r, p);
  return r;
}

Pair twisted_pow_binomial(const Semiring& s, Pair p, int n) {
  if (n < 1) throw DomainError("twisted_pow_binomial: exponent must be >= 1");
  // Integer binomials stay small at workbench scale (n <= ~30).
  std::vector<long long> binom(static_cast<std::size_t>(n) + 1);
  binom[0] = 1;
  for (int i = 1; i <= n; ++i) {
    binom[i] = 1;
    for (int j = i - 1; j >= 1; --j) binom[j] += binom[j - 1];
  }
  int left = s.zero, right = s.zero;
  for (int i = 0; i <= n; ++i) {
    const int term = s.mul(s.pow(p.a, n - i), s.pow(p.b, i));
    const int scaled = s.nat_times(static_cast<int>(binom[i]), term);
    if (i % 2 == 0)
      left = s.add(left, scaled);
    else
      right = s.add(right, scaled);
  }
  return {left, right};
}

}  // namespace semicong
