#ifndef CIG_PRNG_HPP
#define CIG_PRNG_HPP

#include <cstdint>

namespace cig {

// splitmix64 step; also used as the project-wide integer mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic PRNG with an explicitly pinned algorithm, so that seeded
// reports are byte-identical across platforms and standard libraries
// (std:: distributions make no such guarantee).
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix_(); }

  // uniform in [0, n), n >= 1, by rejection
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = splitmix_();
    } while (x >= limit);
    return x % n;
  }

  // child generator for shard `i` of a deterministic parallel sweep
  Prng spawn(std::uint64_t i) const { return Prng(mix64(state_ ^ mix64(i + 0x1234567ULL))); }

 private:
  std::uint64_t splitmix_() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace cig

#endif
