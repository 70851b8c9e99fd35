#include "acm/prime_field.hpp"

#include <utility>

namespace acm {

namespace {

bool is_prime(Fp n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(Fp p) : p_(p) {
    if (p >= (1u << 31)) throw Error("modulus must be below 2^31");
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
}

Fp PrimeField::inv(Fp a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on (a, p).
    long long t = 0, new_t = 1;
    long long r = p_, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return static_cast<Fp>(t);
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
    Fp r = 1 % p_;
    Fp base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace acm
