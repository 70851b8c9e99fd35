#ifndef ACM_PRIME_FIELD_HPP
#define ACM_PRIME_FIELD_HPP

#include <cstdint>

#include "acm/common.hpp"

namespace acm {

// A field element is a plain uint32_t held fully reduced to [0, p).
using Fp = std::uint32_t;

inline constexpr Fp kDefaultPrime = 31991;

// Arithmetic context for F_p. Primality is checked once at construction;
// p < 2^31 so products fit in 64 bits.
class PrimeField {
  public:
    explicit PrimeField(Fp p = kDefaultPrime);

    Fp p() const { return p_; }

    Fp reduce(std::uint64_t a) const { return static_cast<Fp>(a % p_); }
    Fp reduce_signed(long long a) const {
        long long r = a % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Fp>(r);
    }

    Fp add(Fp a, Fp b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p_ ? static_cast<Fp>(s - p_) : static_cast<Fp>(s);
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : static_cast<Fp>(a + p_ - b); }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const { return static_cast<Fp>(std::uint64_t(a) * b % p_); }

    // Throws DivisionByZeroError on a == 0.
    Fp inv(Fp a) const;
    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
    Fp pow(Fp a, std::uint64_t e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    Fp p_;
};

}  // namespace acm

#endif
