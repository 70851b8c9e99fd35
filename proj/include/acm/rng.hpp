#ifndef ACM_RNG_HPP
#define ACM_RNG_HPP

#include <cstdint>

namespace acm {

// SplitMix64 (Steele/Lea/Vigna). Fixed constants, platform-independent
// output, splittable; this is the only randomness source in the project.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, n) via rejection.
    std::uint32_t below(std::uint32_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t u;
        do {
            u = next();
        } while (u >= limit);
        return static_cast<std::uint32_t>(u % n);
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0x5851F42D4C957F2Dull); }

  private:
    std::uint64_t state_;
};

}  // namespace acm

#endif
