#ifndef ACM_HILBERT_HPP
#define ACM_HILBERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "acm/groebner.hpp"

namespace acm {

// Rational Hilbert series Q(t)/(1-t)^s of a graded quotient, stored in
// simplified form: all (1-t) factors cancelled, so Q(1) != 0 (the zero
// series has an empty numerator).
struct HilbertSeries {
    std::vector<long long> numerator;
    int denom_power = 0;  // s
    int nvars = 0;        // ambient variable count

    long long q_at_one() const;
    long long q_prime_at_one() const;

    bool is_zero() const { return numerator.empty(); }

    // Rendered like "(1 + 6t + 12t^2)/(1-t)^2".
    std::string to_string() const;

    bool operator==(const HilbertSeries& o) const {
        return numerator == o.numerator && denom_power == o.denom_power;
    }
};

// Dimension/degree/genus read off a simplified series; raw Hilbert
// polynomial coefficients (over hp_denom) are always populated.
struct HilbertPolynomialInfo {
    int dimension = -1;  // projective dimension, s - 1 (-1: empty scheme)
    long long degree = 0;
    std::optional<long long> genus;         // set when dimension == 1
    std::vector<long long> hp_numer;        // HP(n) = sum hp_numer[i] n^i / hp_denom
    long long hp_denom = 1;
    bool supported = true;  // false when dimension not in {0, 1}
};

// Exact series of the quotient by a monomial ideal via pivot-variable
// splitting with memoization; generators need not be minimal.
HilbertSeries hilbert_series_monomial(const std::vector<Monomial>& gens, int nvars);

// Coefficient of t^n in the expansion.
long long series_to_function(const HilbertSeries& hs, int n);

// dim (R/I)_n by rank: C(n+v-1, v-1) minus the rank of the degree-n multiples
// of the generators. Independent of the series route; throws
// FeasibilityError when a matrix side would exceed 2*10^5.
long long hilbert_function_rank(const Ideal& I, int n, const Ring& R);

HilbertPolynomialInfo hilbert_polynomial(const HilbertSeries& hs);

// Series of R/I via Groebner basis and initial ideal.
HilbertSeries ideal_hilbert_series(const Ideal& I, const Ring& R);

}  // namespace acm

#endif
