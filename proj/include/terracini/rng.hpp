#ifndef TERRACINI_RNG_HPP
#define TERRACINI_RNG_HPP

#include <cstdint>

namespace terracini {

// Deterministic splittable PRNG (splitmix64). Identical seed => identical
// stream; `fork` derives an independent child stream so parallel samplers
// can each own a source without sharing state.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // rejection from the top 63 bits keeps the distribution exactly uniform
    std::uint64_t limit = (~0ULL) - (~0ULL) % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  Rng fork() { return Rng(next() ^ 0xd1342543de82ef95ULL); }

  std::uint64_t seed_state() const { return state_; }

private:
  std::uint64_t state_;
};

} // namespace terracini

#endif // TERRACINI_RNG_HPP
