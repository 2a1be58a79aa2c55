#ifndef POLYPHASE_RNG_HPP
#define POLYPHASE_RNG_HPP

// Deterministic, platform-independent random streams.  SplitMix64 state with
// an explicit Box-Muller normal transform; std distributions are avoided so
// that identical seeds give bitwise-identical output everywhere.

#include <cmath>
#include <cstdint>

namespace polyphase {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in (0,1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform(), u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // integer in [0, n)
  uint64_t below(uint64_t n) { return next_u64() % n; }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Schedule-independent stream derivation: hash-chain the master seed with the
// identifying coordinates of the consumer (cell, trial, purpose tag).
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0,
                            uint64_t c = 0, uint64_t d = 0) {
  auto mix = [](uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    Rng r(h);
    return r.next_u64();
  };
  uint64_t h = master;
  h = mix(h, a);
  h = mix(h, b);
  h = mix(h, c);
  h = mix(h, d);
  return h;
}

}  // namespace polyphase

#endif
