#ifndef ACM_GROEBNER_HPP
#define ACM_GROEBNER_HPP

#include <vector>

#include "acm/polynomial.hpp"

namespace acm {

// Generator list; construction normalizes: zero generators dropped, each
// made monic, exact duplicates removed.
struct Ideal {
    std::vector<Polynomial> gens;
    int nvars = 0;

    static Ideal make(std::vector<Polynomial> gens, const Ring& R);

    bool is_zero() const { return gens.empty(); }
    int max_generator_degree() const;
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;  // monic, sorted ascending by leading monomial
    MonomialOrder order;
    bool reduced = false;
};

// Remainder of multivariate division of f by G (in list order): no term of
// the result is divisible by any leading term of G, and f - result lies in
// the ideal generated by G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const Ring& R);

// Buchberger completion with the sugar selection strategy and the
// Gebauer-Moeller product/chain pair pruning, followed by inter-reduction;
// the result is the unique reduced basis for (I, R.order()).
//
// max_degree >= 0 truncates: only S-pairs with sugar <= max_degree are
// processed, which for homogeneous input yields the basis through that
// degree.
GroebnerBasis buchberger(const Ideal& I, const Ring& R, int max_degree = -1);

// Generators of I ∩ k[trailing variables], computed from a block-order
// basis; the result lives in a fresh (nvars-k)-variable grevlex ring and is
// itself a reduced basis under that order.
Ideal eliminate(const Ideal& I, int k, const Ring& R);

// Minimal monomial generators of the initial ideal of a basis.
std::vector<Monomial> leading_term_ideal(const GroebnerBasis& G);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& G, const Ring& R);

}  // namespace acm

#endif
