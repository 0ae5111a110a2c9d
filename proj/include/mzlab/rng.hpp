#ifndef MZLAB_RNG_HPP
#define MZLAB_RNG_HPP

#include <cstdint>

namespace mzlab {

// splitmix64: deterministic across platforms, good enough for test-instance
// generation.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform-ish in [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

  private:
    uint64_t state_;
};

}  // namespace mzlab

#endif
