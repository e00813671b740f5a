#ifndef SEMICONG_PRNG_HPP
#define SEMICONG_PRNG_HPP

#include <cstdint>
#include <random>

namespace semicong {

// mt19937_64 is fully specified by the standard; std::uniform_int_distribution
// is not, so bounded draws are done by rejection to keep seeded runs
// byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool coin() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace semicong

#endif
