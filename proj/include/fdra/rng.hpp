#ifndef FDRA_RNG_HPP
#define FDRA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace fdra {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t a, uint64_t b) {
  uint64_t s = a + 0x9e3779b97f4a7c15ull * (b + 1);
  return splitmix64(s);
}

inline uint64_t fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Derives an independent seed for a named stream, e.g. stream_seed(seed, "link", {episode, ue}).
inline uint64_t stream_seed(uint64_t seed, std::string_view name,
                            std::initializer_list<uint64_t> keys = {}) {
  uint64_t h = mix64(seed, fnv1a64(name));
  for (uint64_t k : keys) h = mix64(h, k);
  return h;
}

// Small deterministic generator. All simulation randomness goes through this
// class so results do not depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64(state_); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // [0, n), n > 0; rejection keeps it unbiased
  int uniform_int(int n) {
    uint64_t un = static_cast<uint64_t>(n);
    uint64_t bound = ~0ull - ~0ull % un;
    uint64_t r;
    do {
      r = next_u64();
    } while (r >= bound);
    return static_cast<int>(r % un);
  }

  // standard normal via Box-Muller; always consumes two draws
  double normal() {
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  uint64_t state_;
};

// One-shot normal addressed by counter keys; used for reproducible AR(1) innovations.
inline double counter_normal(uint64_t seed, std::string_view stream,
                             std::initializer_list<uint64_t> keys) {
  Rng rng(stream_seed(seed, stream, keys));
  return rng.normal();
}

}  // namespace fdra

#endif
