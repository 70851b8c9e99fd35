#ifndef ACM_MONOMIAL_HPP
#define ACM_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "acm/common.hpp"

namespace acm {

// Enough for the plane ring (3), the target ring (8) and the combined
// elimination ring (11).
inline constexpr int kMaxVars = 12;

// Exponent vector with cached total degree. Exponents are uint8; degrees in
// play stay far below 255 and the checked product throws if one would not.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : nvars_(check_nvars(nvars)) {}
    Monomial(int nvars, std::span<const int> exps);
    Monomial(int nvars, std::initializer_list<int> exps)
        : Monomial(nvars, std::span<const int>(exps.begin(), exps.size())) {}

    static Monomial variable(int nvars, int i, int power = 1);

    int nvars() const { return nvars_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }
    bool is_unit() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;  // pre: o.divides(*this) is false the other way
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    // Degree of the sub-block [lo, hi).
    int block_degree(int lo, int hi) const;

    bool operator==(const Monomial& o) const { return nvars_ == o.nvars_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const;

  private:
    static int check_nvars(int n) {
        if (n < 1 || n > kMaxVars) throw DimensionError("variable count out of range");
        return n;
    }

    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint8_t nvars_ = 0;
    std::uint16_t deg_ = 0;
};

struct MonomialOrder {
    enum class Kind { grevlex, lex, block };

    Kind kind = Kind::grevlex;
    int block_split = 0;  // leading (eliminated) block size for Kind::block

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block_elim(int k) { return {Kind::block, k}; }

    // +1 if a > b, 0 if equal, -1 if a < b. Throws DimensionError when the
    // ambient variable counts differ.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::block || block_split == o.block_split);
    }
};

}  // namespace acm

#endif
