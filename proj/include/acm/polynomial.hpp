#ifndef ACM_POLYNOMIAL_HPP
#define ACM_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "acm/ring.hpp"

namespace acm {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Hash index over a graded monomial basis, for coefficient packing.
class MonomialIndex {
  public:
    explicit MonomialIndex(const std::vector<Monomial>& basis) {
        map_.reserve(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) map_.emplace(basis[i], static_cast<int>(i));
    }
    int at(const Monomial& m) const {
        auto it = map_.find(m);
        return it == map_.end() ? -1 : it->second;
    }

  private:
    std::unordered_map<Monomial, int, MonomialHash> map_;
};

struct Term {
    Monomial mono;
    Fp coeff = 0;

    bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

// Sparse multivariate polynomial. Terms are kept strictly descending under
// the order of the ring the polynomial was produced in; coefficients are
// nonzero and fully reduced.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    // Sorts, merges duplicates and prunes zeros.
    static Polynomial from_terms(std::vector<Term> terms, const Ring& R);
    // pre: terms strictly descending, coefficients nonzero and reduced.
    static Polynomial from_sorted_terms(std::vector<Term> terms, int nvars);
    static Polynomial constant(Fp c, const Ring& R);
    static Polynomial single(const Monomial& m, Fp c, int nvars);  // pre: already canonical

    bool is_zero() const { return terms_.empty(); }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }

    // Total degree (max over terms); -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Fp coefficient(const Monomial& m) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string(const Ring& R) const;
    static Polynomial parse(std::string_view text, const Ring& R);  // throws ParseError (line 1)

  private:
    std::vector<Term> terms_;
    int nvars_ = 0;

    friend Polynomial add(const Polynomial&, const Polynomial&, const Ring&);
    friend Polynomial sub(const Polynomial&, const Polynomial&, const Ring&);
    friend Polynomial mul(const Polynomial&, const Polynomial&, const Ring&);
    friend Polynomial scalar_mul(const Polynomial&, Fp, const Ring&);
    friend Polynomial negate(const Polynomial&, const Ring&);
    friend Polynomial mono_mul(const Polynomial&, const Monomial&, Fp, const Ring&);
    friend Polynomial axpy(const Polynomial&, Fp, const Monomial&, const Polynomial&,
                           const Ring&);
};

Polynomial add(const Polynomial& f, const Polynomial& g, const Ring& R);
Polynomial sub(const Polynomial& f, const Polynomial& g, const Ring& R);
Polynomial mul(const Polynomial& f, const Polynomial& g, const Ring& R);
Polynomial scalar_mul(const Polynomial& f, Fp c, const Ring& R);
Polynomial negate(const Polynomial& f, const Ring& R);

// f * c * m; preserves term order (monomial orders are multiplicative).
Polynomial mono_mul(const Polynomial& f, const Monomial& m, Fp c, const Ring& R);

// f + c * m * g as one sorted merge; the Buchberger hot path.
Polynomial axpy(const Polynomial& f, Fp c, const Monomial& m, const Polynomial& g,
                const Ring& R);

Polynomial monic(const Polynomial& f, const Ring& R);

Polynomial partial_derivative(const Polynomial& f, int var, const Ring& R);

Fp evaluate(const Polynomial& f, std::span<const Fp> point, const Ring& R);

// f with each target-ring variable y_i replaced by forms[i] (all in the
// source ring); exact, used for kernel verification.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> forms,
                      const Ring& target, const Ring& source);

// Coefficient vector of a homogeneous polynomial over a descending graded
// basis of its degree; basis_index maps monomial hash buckets to positions.
std::vector<Fp> coefficient_vector(const Polynomial& f, const std::vector<Monomial>& basis);

}  // namespace acm

#endif
