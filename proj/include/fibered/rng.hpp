#pragma once

#include <cstdint>
#include <random>

namespace fibered {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// mt19937_64 plus rejection sampling; std::uniform_int_distribution is
// implementation defined, so streams here are bit-stable across compilers
class rng {
 public:
  explicit rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform in [0, n), n >= 1
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  bool coin() { return (gen_() & 1) != 0; }

  // per-trial stream, independent of how trials are scheduled
  static rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return rng(a ^ (b << 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace fibered
