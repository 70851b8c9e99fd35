#ifndef ACM_RING_HPP
#define ACM_RING_HPP

#include <string>
#include <vector>

#include "acm/monomial.hpp"
#include "acm/prime_field.hpp"

namespace acm {

// Ambient polynomial ring: variable count, coefficient field, active
// monomial order and printable variable names.
//
// Naming convention: 3 variables print as x0..x2 (the plane), 8 as y0..y7
// (the target space), 11 as x0..x2,y0..y7 (the elimination ring); anything
// else as x0..x{n-1}.
class Ring {
  public:
    Ring(int nvars, PrimeField field, MonomialOrder order = MonomialOrder::grevlex());
    Ring(int nvars, PrimeField field, MonomialOrder order, std::vector<std::string> names);

    int nvars() const { return nvars_; }
    const PrimeField& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int var_index(const std::string& name) const;  // -1 when unknown

    static std::vector<std::string> default_names(int nvars);

    bool compatible(const Ring& o) const {
        return nvars_ == o.nvars_ && field_ == o.field_;
    }

  private:
    int nvars_;
    PrimeField field_;
    MonomialOrder order_;
    std::vector<std::string> names_;
};

// All monomials of the given degree, sorted descending by ord.
// Size is C(degree + nvars - 1, nvars - 1).
std::vector<Monomial> graded_basis(int degree, int nvars, const MonomialOrder& ord);

inline std::vector<Monomial> graded_basis(int degree, const Ring& R) {
    return graded_basis(degree, R.nvars(), R.order());
}

}  // namespace acm

#endif
