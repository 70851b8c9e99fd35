#include "acm/hilbert.hpp"

#include <algorithm>
#include <map>

namespace acm {

namespace {

using Numer = std::vector<long long>;

void trim(Numer& n) {
    while (!n.empty() && n.back() == 0) n.pop_back();
}

Numer poly_mul(const Numer& a, const Numer& b) {
    if (a.empty() || b.empty()) return {};
    Numer out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Numer poly_add_shifted(Numer a, const Numer& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
    return a;
}

// 1 - t^d
Numer one_minus_power(int d) {
    Numer n(static_cast<std::size_t>(d) + 1, 0);
    n[0] = 1;
    n[static_cast<std::size_t>(d)] -= 1;
    return n;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
            if (a == b) continue;
            if (gens[b].divides(gens[a]) && (gens[b] != gens[a] || b < a)) redundant = true;
        }
        if (!redundant) out.push_back(gens[a]);
    }
    return out;
}

struct MemoKey {
    std::vector<std::uint8_t> bytes;
    bool operator<(const MemoKey& o) const { return bytes < o.bytes; }
};

MemoKey key_of(const std::vector<Monomial>& gens, int nvars) {
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        std::vector<std::uint8_t> r(static_cast<std::size_t>(nvars));
        for (int i = 0; i < nvars; ++i) r[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g[i]);
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    MemoKey k;
    for (auto& r : rows) k.bytes.insert(k.bytes.end(), r.begin(), r.end());
    return k;
}

struct NumeratorComputer {
    int nvars;
    std::map<MemoKey, Numer> memo;

    // Numerator N with Hilb(R/I) = N / (1-t)^nvars; gens minimal.
    Numer run(const std::vector<Monomial>& gens) {
        if (gens.empty()) return {1};
        for (const auto& g : gens)
            if (g.is_unit()) return {};  // unit ideal, zero quotient

        // Base: pairwise-coprime pure variable powers.
        bool pure = true;
        for (const auto& g : gens) {
            int vars_used = 0;
            for (int i = 0; i < nvars; ++i)
                if (g[i]) ++vars_used;
            if (vars_used != 1) {
                pure = false;
                break;
            }
        }
        if (pure) {
            Numer n{1};
            for (const auto& g : gens) n = poly_mul(n, one_minus_power(g.degree()));
            trim(n);
            return n;
        }
        if (gens.size() == 2) {
            // N = 1 - t^d1 - t^d2 + t^deg(lcm)
            Numer n{1};
            n = poly_add_shifted(std::move(n), {-1}, static_cast<std::size_t>(gens[0].degree()));
            n = poly_add_shifted(std::move(n), {-1}, static_cast<std::size_t>(gens[1].degree()));
            n = poly_add_shifted(std::move(n), {1},
                                 static_cast<std::size_t>(Monomial::lcm(gens[0], gens[1]).degree()));
            trim(n);
            return n;
        }

        MemoKey key = key_of(gens, nvars);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        // Pivot on the variable occurring in the most non-pure generators.
        std::vector<int> freq(static_cast<std::size_t>(nvars), 0);
        for (const auto& g : gens) {
            int vars_used = 0;
            for (int i = 0; i < nvars; ++i)
                if (g[i]) ++vars_used;
            if (vars_used < 2) continue;
            for (int i = 0; i < nvars; ++i)
                if (g[i]) ++freq[static_cast<std::size_t>(i)];
        }
        int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

        // I + (x_pivot): drop generators with positive pivot exponent.
        std::vector<Monomial> plus{Monomial::variable(nvars, pivot)};
        for (const auto& g : gens)
            if (g[pivot] == 0) plus.push_back(g);

        // I : x_pivot: divide pivot exponents down by one where possible.
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        for (const auto& g : gens) {
            if (g[pivot] > 0)
                colon.push_back(g.divided_by(Monomial::variable(nvars, pivot)));
            else
                colon.push_back(g);
        }
        colon = minimalize(std::move(colon));

        Numer n = poly_add_shifted(run(plus), run(colon), 1);
        trim(n);
        memo.emplace(std::move(key), n);
        return n;
    }
};

}  // namespace

long long HilbertSeries::q_at_one() const {
    long long s = 0;
    for (auto c : numerator) s += c;
    return s;
}

long long HilbertSeries::q_prime_at_one() const {
    long long s = 0;
    for (std::size_t i = 1; i < numerator.size(); ++i)
        s += static_cast<long long>(i) * numerator[i];
    return s;
}

std::string HilbertSeries::to_string() const {
    if (numerator.empty()) return "0";
    std::string num;
    bool first = true;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        long long c = numerator[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) num += "-";
            first = false;
        } else {
            num += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        std::string power;
        if (i == 1)
            power = "t";
        else if (i >= 2)
            power = "t^" + std::to_string(i);
        if (a != 1 || power.empty()) num += std::to_string(a);
        num += power;
    }
    std::string out = "(" + num + ")";
    if (denom_power == 1)
        out += "/(1-t)";
    else if (denom_power >= 2)
        out += "/(1-t)^" + std::to_string(denom_power);
    return out;
}

HilbertSeries hilbert_series_monomial(const std::vector<Monomial>& gens, int nvars) {
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw DimensionError("monomial from a different ring");
    NumeratorComputer nc{nvars, {}};
    Numer n = nc.run(minimalize(gens));
    trim(n);

    HilbertSeries hs;
    hs.nvars = nvars;
    hs.denom_power = nvars;
    if (n.empty()) {
        hs.numerator = {};
        hs.denom_power = 0;
        return hs;
    }
    // Cancel (1-t) factors: while N(1) == 0, divide exactly.
    while (hs.denom_power > 0) {
        long long at_one = 0;
        for (auto c : n) at_one += c;
        if (at_one != 0) break;
        Numer q(n.size() ? n.size() - 1 : 0, 0);
        long long carry = 0;
        for (std::size_t k = 0; k + 1 < n.size() || k < q.size(); ++k) {
            carry = n[k] + carry;
            if (k < q.size()) q[k] = carry;
        }
        n = std::move(q);
        trim(n);
        --hs.denom_power;
    }
    hs.numerator = std::move(n);
    return hs;
}

long long series_to_function(const HilbertSeries& hs, int n) {
    if (n < 0) return 0;
    const int s = hs.denom_power;
    if (s == 0)
        return static_cast<std::size_t>(n) < hs.numerator.size()
                   ? hs.numerator[static_cast<std::size_t>(n)]
                   : 0;
    long long acc = 0;
    for (std::size_t i = 0; i < hs.numerator.size() && static_cast<int>(i) <= n; ++i)
        acc += hs.numerator[i] * binomial(n - static_cast<long long>(i) + s - 1, s - 1);
    return acc;
}

HilbertPolynomialInfo hilbert_polynomial(const HilbertSeries& hs) {
    HilbertPolynomialInfo info;
    const int s = hs.denom_power;
    info.dimension = s - 1;
    if (hs.is_zero() || s == 0) {
        info.dimension = hs.is_zero() ? -1 : s - 1;
        info.degree = 0;
        info.hp_numer = {0};
        info.hp_denom = 1;
        info.supported = false;
        return info;
    }
    info.degree = hs.q_at_one();
    if (s == 2) info.genus = 1 - hs.q_at_one() + hs.q_prime_at_one();
    info.supported = (s == 1 || s == 2);

    // HP(n) = sum_i Q_i * C(n - i + s - 1, s - 1); expand in powers of n
    // over the common denominator (s-1)!.
    Numer acc{0};
    for (std::size_t i = 0; i < hs.numerator.size(); ++i) {
        Numer prod{1};
        for (int j = 1; j <= s - 1; ++j)
            prod = poly_mul(prod, Numer{j - static_cast<long long>(i), 1});
        for (auto& c : prod) c *= hs.numerator[i];
        acc = poly_add_shifted(std::move(acc), prod, 0);
    }
    long long fact = 1;
    for (int j = 2; j <= s - 1; ++j) fact *= j;
    trim(acc);
    if (acc.empty()) acc = {0};
    info.hp_numer = std::move(acc);
    info.hp_denom = fact;
    return info;
}

long long hilbert_function_rank(const Ideal& I, int n, const Ring& R) {
    if (n < 0) throw DimensionError("negative degree");
    const int v = R.nvars();
    long long ncols = binomial(n + v - 1, v - 1);
    if (ncols > 200000) throw FeasibilityError("degree-" + std::to_string(n) + " basis too large");
    std::vector<Monomial> basis = graded_basis(n, v, R.order());
    MonomialIndex index(basis);

    std::vector<std::vector<Fp>> rows;
    for (const auto& g : I.gens) {
        int d = g.degree();
        if (d > n || d < 0) continue;
        for (const auto& m : graded_basis(n - d, v, R.order())) {
            Polynomial prod = mono_mul(g, m, 1, R);
            std::vector<Fp> row(basis.size(), 0);
            for (const auto& t : prod.terms()) {
                int idx = index.at(t.mono);
                if (idx < 0) throw Error("inhomogeneous generator in graded rank");
                row[static_cast<std::size_t>(idx)] = t.coeff;
            }
            rows.push_back(std::move(row));
            if (rows.size() > 200000) throw FeasibilityError("too many generator multiples");
        }
    }
    Matrix m(rows.size(), basis.size(), R.field());
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return ncols - static_cast<long long>(m.rank());
}

HilbertSeries ideal_hilbert_series(const Ideal& I, const Ring& R) {
    GroebnerBasis gb = buchberger(I, R);
    return hilbert_series_monomial(leading_term_ideal(gb), R.nvars());
}

}  // namespace acm
