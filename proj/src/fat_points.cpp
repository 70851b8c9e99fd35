#include "acm/fat_points.hpp"

#include <algorithm>

#include "acm/hilbert.hpp"

namespace acm {

PointP2 PointP2::make(std::array<Fp, 3> raw, const PrimeField& F) {
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        raw[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] % F.p();
        if (lead < 0 && raw[static_cast<std::size_t>(i)] != 0) lead = i;
    }
    if (lead < 0) throw Error("projective point needs a nonzero coordinate");
    Fp iv = F.inv(raw[static_cast<std::size_t>(lead)]);
    PointP2 p;
    for (int i = 0; i < 3; ++i) p.c[static_cast<std::size_t>(i)] = F.mul(raw[static_cast<std::size_t>(i)], iv);
    return p;
}

std::string PointP2::to_string() const {
    return std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]);
}

namespace {

PointP2 sample_point(SplitMix64& rng, const PrimeField& F) {
    for (;;) {
        std::array<Fp, 3> raw{rng.below(F.p()), rng.below(F.p()), rng.below(F.p())};
        if (raw[0] || raw[1] || raw[2]) return PointP2::make(raw, F);
    }
}

bool contains(const std::vector<PointP2>& pts, const PointP2& q) {
    return std::find(pts.begin(), pts.end(), q) != pts.end();
}

// Falling factorial e(e-1)...(e-a+1) mod p.
Fp falling(int e, int a, const PrimeField& F) {
    Fp r = 1;
    for (int i = 0; i < a; ++i) r = F.mul(r, F.reduce_signed(e - i));
    return r;
}

}  // namespace

std::vector<PointP2> random_general_points(int count, SplitMix64& rng, const Ring& R,
                                           std::span<const SystemSpec> certify,
                                           bool normalize_first_three, int budget) {
    if (count < 1) throw DimensionError("point count must be positive");
    if (normalize_first_three && count < 3)
        throw DimensionError("triangle normalization needs at least 3 points");
    const PrimeField& F = R.field();

    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<PointP2> pts;
        pts.reserve(static_cast<std::size_t>(count));
        if (normalize_first_three) {
            pts.push_back(PointP2::make({1, 0, 0}, F));
            pts.push_back(PointP2::make({0, 1, 0}, F));
            pts.push_back(PointP2::make({0, 0, 1}, F));
        }
        bool clash = false;
        while (static_cast<int>(pts.size()) < count) {
            PointP2 q = sample_point(rng, F);
            if (contains(pts, q)) {
                clash = true;
                break;
            }
            pts.push_back(q);
        }
        if (clash) continue;

        bool generic = true;
        for (const auto& spec : certify) {
            if (static_cast<int>(spec.multiplicities.size()) != count)
                throw DimensionError("certification pattern length mismatch");
            std::vector<FatPoint> fat;
            fat.reserve(pts.size());
            for (int i = 0; i < count; ++i)
                fat.push_back({pts[static_cast<std::size_t>(i)], spec.multiplicities[static_cast<std::size_t>(i)]});
            Matrix m = condition_matrix(spec.degree, fat, R);
            if (m.rank() != std::min(m.rows(), m.cols())) {
                generic = false;
                break;
            }
        }
        if (generic) return pts;
    }
    throw GenericityError("no general point configuration found within budget");
}

Matrix condition_matrix(int degree, std::span<const FatPoint> conditions, const Ring& R) {
    if (R.nvars() != 3) throw DimensionError("fat points live in the plane ring");
    if (R.field().p() <= static_cast<Fp>(degree))
        throw CharacteristicError("derivative conditions need p > degree");
    const PrimeField& F = R.field();

    std::vector<Monomial> basis = graded_basis(degree, R);
    std::size_t nrows = 0;
    for (const auto& fp : conditions) {
        if (fp.multiplicity < 1) throw DimensionError("multiplicity must be >= 1");
        if (degree < fp.multiplicity - 1)
            throw DimensionError("degree below multiplicity - 1");
        nrows += static_cast<std::size_t>(binomial(fp.multiplicity + 1, 2));
    }

    Matrix m(nrows, basis.size(), F);
    std::size_t r = 0;
    for (const auto& fp : conditions) {
        // All partials of order exactly m-1, indexed by their own exponent
        // vectors in descending order.
        for (const auto& alpha : graded_basis(fp.multiplicity - 1, R)) {
            for (std::size_t cidx = 0; cidx < basis.size(); ++cidx) {
                const Monomial& mono = basis[cidx];
                Fp val = 1;
                for (int v = 0; v < 3 && val; ++v) {
                    int e = mono[v], a = alpha[v];
                    if (a > e) {
                        val = 0;
                        break;
                    }
                    val = F.mul(val, falling(e, a, F));
                    val = F.mul(val, F.pow(fp.point.c[static_cast<std::size_t>(v)],
                                           static_cast<std::uint64_t>(e - a)));
                }
                m(r, cidx) = val;
            }
            ++r;
        }
    }
    return m;
}

LinearSystem linear_system(int degree, std::vector<FatPoint> conditions, const Ring& R) {
    Matrix m = condition_matrix(degree, conditions, R);
    std::vector<Monomial> basis = graded_basis(degree, R);
    LinearSystem sys;
    sys.degree = degree;
    sys.conditions = std::move(conditions);
    for (const auto& v : m.kernel()) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v[i]) terms.push_back({basis[i], v[i]});
        sys.basis.push_back(Polynomial::from_terms(std::move(terms), R));
    }
    return sys;
}

Polynomial random_member(const LinearSystem& sys, SplitMix64& rng, const Ring& R) {
    if (sys.basis.empty()) throw EmptySystemError("linear system has no members");
    const PrimeField& F = R.field();
    for (;;) {
        std::vector<Fp> coeffs(sys.basis.size());
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = rng.below(F.p());
            nonzero = nonzero || c != 0;
        }
        if (!nonzero) continue;
        Polynomial out(R.nvars());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out = add(out, scalar_mul(sys.basis[i], coeffs[i], R), R);
        return out;
    }
}

long long singular_scheme_degree(const Polynomial& F, const Ring& R) {
    if (R.nvars() != 3) throw DimensionError("singular scheme is for plane curves");
    if (F.is_zero()) throw Error("zero polynomial has no singular scheme");
    if (!F.is_homogeneous()) throw Error("curve equation must be homogeneous");
    std::vector<Polynomial> gens{F};
    for (int v = 0; v < 3; ++v) gens.push_back(partial_derivative(F, v, R));
    GroebnerBasis gb = buchberger(Ideal::make(std::move(gens), R), R);
    HilbertSeries hs = hilbert_series_monomial(leading_term_ideal(gb), 3);
    if (hs.is_zero() || hs.denom_power == 0) return 0;  // smooth: empty singular scheme
    if (hs.denom_power >= 2)
        throw NonIsolatedSingularityError("singular scheme has positive dimension");
    return hs.q_at_one();
}

}  // namespace acm
