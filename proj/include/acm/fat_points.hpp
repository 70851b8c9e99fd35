#ifndef ACM_FAT_POINTS_HPP
#define ACM_FAT_POINTS_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "acm/matrix.hpp"
#include "acm/polynomial.hpp"
#include "acm/rng.hpp"

namespace acm {

// Point of P^2 with canonical coordinates: first nonzero entry scaled to 1.
struct PointP2 {
    std::array<Fp, 3> c{};

    static PointP2 make(std::array<Fp, 3> raw, const PrimeField& F);

    bool operator==(const PointP2& o) const { return c == o.c; }
    std::string to_string() const;
};

struct FatPoint {
    PointP2 point;
    int multiplicity = 1;  // m >= 1; imposes C(m+1, 2) conditions
};

// Vanishing pattern used to certify point genericity: one multiplicity per
// sampled point, applied to forms of the given degree.
struct SystemSpec {
    int degree = 0;
    std::vector<int> multiplicities;
};

struct LinearSystem {
    int degree = 0;
    std::vector<FatPoint> conditions;
    std::vector<Polynomial> basis;  // canonical kernel basis

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Distinct random points, deterministic in the rng state. When certify
// patterns are given the whole sample is redrawn until every condition
// matrix reaches maximal rank (at most `budget` attempts, then
// GenericityError). normalize_first_three pins the first three points to
// the coordinate triangle.
std::vector<PointP2> random_general_points(int count, SplitMix64& rng, const Ring& R,
                                           std::span<const SystemSpec> certify = {},
                                           bool normalize_first_three = false,
                                           int budget = 100);

// One row per vanishing condition: all order-(m-1) partials of the generic
// degree-n form evaluated at the point (homogeneity plus p > n make the
// lower orders follow). Columns follow graded_basis(n). Throws
// CharacteristicError when p <= n.
Matrix condition_matrix(int degree, std::span<const FatPoint> conditions, const Ring& R);

LinearSystem linear_system(int degree, std::vector<FatPoint> conditions, const Ring& R);

// Random F_p-combination of the basis, redrawn while all coefficients are
// zero. Throws EmptySystemError on an empty system.
Polynomial random_member(const LinearSystem& sys, SplitMix64& rng, const Ring& R);

// Degree of the 0-dimensional scheme cut out by F and its partials, via
// Groebner basis and Hilbert polynomial; 0 for a smooth curve. Throws
// NonIsolatedSingularityError when that scheme has positive dimension.
long long singular_scheme_degree(const Polynomial& F, const Ring& R);

}  // namespace acm

#endif
