#include "acm/groebner.hpp"

#include <algorithm>

namespace acm {

Ideal Ideal::make(std::vector<Polynomial> gens, const Ring& R) {
    Ideal out;
    out.nvars = R.nvars();
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars() != R.nvars()) throw DimensionError("generator from a different ring");
        Polynomial m = monic(g, R);
        if (std::find(out.gens.begin(), out.gens.end(), m) == out.gens.end())
            out.gens.push_back(std::move(m));
    }
    return out;
}

int Ideal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

namespace {

// work[offset..] is a polynomial in descending term order; replaces it by
// work[offset..] + c * m * g and resets the offset.
void tail_axpy(std::vector<Term>& work, std::size_t& offset, Fp c, const Monomial& m,
               const Polynomial& g, const Ring& R) {
    const MonomialOrder& ord = R.order();
    const PrimeField& F = R.field();
    std::vector<Term> out;
    out.reserve(work.size() - offset + g.term_count());
    std::size_t i = offset;
    std::size_t j = 0;
    const auto& gt = g.terms();
    while (i < work.size() && j < gt.size()) {
        Monomial gm = gt[j].mono.times(m);
        int cv = ord.cmp(work[i].mono, gm);
        if (cv > 0) {
            out.push_back(work[i++]);
        } else if (cv < 0) {
            Fp v = F.mul(gt[j].coeff, c);
            if (v) out.push_back({std::move(gm), v});
            ++j;
        } else {
            Fp s = F.add(work[i].coeff, F.mul(gt[j].coeff, c));
            if (s) out.push_back({std::move(gm), s});
            ++i, ++j;
        }
    }
    for (; i < work.size(); ++i) out.push_back(work[i]);
    for (; j < gt.size(); ++j) {
        Fp v = F.mul(gt[j].coeff, c);
        if (v) out.push_back({gt[j].mono.times(m), v});
    }
    work = std::move(out);
    offset = 0;
}

// Division remainder; reducers picked in list order via the divides
// callback. remainder is emitted in strictly descending order.
template <typename FindReducer>
Polynomial divide(const Polynomial& f, const Ring& R, FindReducer&& find) {
    std::vector<Term> work(f.terms().begin(), f.terms().end());
    std::size_t offset = 0;
    std::vector<Term> remainder;
    while (offset < work.size()) {
        const Term& lt = work[offset];
        const Polynomial* g = find(lt.mono);
        if (g == nullptr) {
            remainder.push_back(lt);
            ++offset;
            continue;
        }
        Fp c = R.field().neg(R.field().div(lt.coeff, g->leading_term().coeff));
        Monomial q = lt.mono.divided_by(g->leading_monomial());
        tail_axpy(work, offset, c, q, *g, R);
    }
    return Polynomial::from_sorted_terms(std::move(remainder), R.nvars());
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const Ring& R) {
    return divide(f, R, [&G](const Monomial& m) -> const Polynomial* {
        for (const auto& g : G)
            if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
        return nullptr;
    });
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
};

struct Engine {
    const Ring& R;
    std::vector<Polynomial> basis;
    std::vector<int> sugar;
    std::vector<Pair> pairs;

    explicit Engine(const Ring& R_) : R(R_) {}

    const Monomial& lm(int i) const { return basis[i].leading_monomial(); }

    // Gebauer-Moeller pair update for a new element h.
    void update(Polynomial h, int h_sugar) {
        const int t = static_cast<int>(basis.size());
        const Monomial lmh = h.leading_monomial();

        struct Fresh {
            Pair pair;
            bool coprime;
        };
        std::vector<Fresh> fresh;
        fresh.reserve(basis.size());
        for (int g = 0; g < t; ++g) {
            Monomial l = Monomial::lcm(lmh, lm(g));
            int s = std::max(h_sugar + l.degree() - lmh.degree(),
                             sugar[g] + l.degree() - lm(g).degree());
            fresh.push_back({{g, t, std::move(l), s}, lmh.coprime(lm(g))});
        }

        // Keep a pair unless its lcm is divisible by the lcm of a pair still
        // waiting or already kept; coprime pairs always pass this stage and
        // are discarded afterwards (product criterion).
        std::vector<Fresh> kept_new;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            bool dominated = false;
            if (!fresh[a].coprime) {
                for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
                    if (fresh[b].pair.lcm.divides(fresh[a].pair.lcm)) dominated = true;
                for (const auto& d : kept_new)
                    if (d.pair.lcm.divides(fresh[a].pair.lcm)) {
                        dominated = true;
                        break;
                    }
            }
            if (fresh[a].coprime || !dominated) kept_new.push_back(fresh[a]);
        }

        // Chain criterion against the old pair list.
        std::vector<Pair> survivors;
        survivors.reserve(pairs.size() + kept_new.size());
        for (auto& pr : pairs) {
            bool drop = lmh.divides(pr.lcm) && Monomial::lcm(lmh, lm(pr.i)) != pr.lcm &&
                        Monomial::lcm(lmh, lm(pr.j)) != pr.lcm;
            if (!drop) survivors.push_back(std::move(pr));
        }
        for (auto& d : kept_new)
            if (!d.coprime) survivors.push_back(std::move(d.pair));
        pairs = std::move(survivors);

        basis.push_back(std::move(h));
        sugar.push_back(h_sugar);
    }

    std::size_t select() const {
        std::size_t best = 0;
        for (std::size_t a = 1; a < pairs.size(); ++a) {
            const Pair& x = pairs[a];
            const Pair& y = pairs[best];
            if (x.sugar != y.sugar) {
                if (x.sugar < y.sugar) best = a;
                continue;
            }
            int c = R.order().cmp(x.lcm, y.lcm);
            if (c < 0 || (c == 0 && (x.i < y.i || (x.i == y.i && x.j < y.j)))) best = a;
        }
        return best;
    }

    Polynomial reduce_full(const Polynomial& f, int& sug) const {
        std::vector<Term> work(f.terms().begin(), f.terms().end());
        std::size_t offset = 0;
        std::vector<Term> remainder;
        while (offset < work.size()) {
            const Term& lt = work[offset];
            int red = -1;
            for (std::size_t g = 0; g < basis.size(); ++g) {
                if (basis[g].leading_monomial().divides(lt.mono)) {
                    red = static_cast<int>(g);
                    break;
                }
            }
            if (red < 0) {
                remainder.push_back(lt);
                ++offset;
                continue;
            }
            Monomial q = lt.mono.divided_by(lm(red));
            sug = std::max(sug, sugar[red] + q.degree());
            tail_axpy(work, offset, R.field().neg(lt.coeff), q, basis[red], R);
        }
        return Polynomial::from_sorted_terms(std::move(remainder), R.nvars());
    }

    Polynomial s_polynomial(const Pair& pr) const {
        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        Monomial mf = pr.lcm.divided_by(f.leading_monomial());
        Monomial mg = pr.lcm.divided_by(g.leading_monomial());
        Polynomial a = mono_mul(f, mf, 1, R);
        return axpy(a, R.field().p() - 1, mg, g, R);
    }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const Ring& R, int max_degree) {
    Engine e(R);
    for (const auto& g : I.gens) {
        int sug = g.degree();
        Polynomial r = e.reduce_full(monic(g, R), sug);
        if (!r.is_zero()) e.update(monic(r, R), sug);
    }

    while (!e.pairs.empty()) {
        std::size_t idx = e.select();
        Pair pr = std::move(e.pairs[idx]);
        e.pairs.erase(e.pairs.begin() + static_cast<std::ptrdiff_t>(idx));
        if (max_degree >= 0 && pr.sugar > max_degree) continue;
        Polynomial s = e.s_polynomial(pr);
        if (s.is_zero()) continue;
        int sug = pr.sugar;
        Polynomial r = e.reduce_full(s, sug);
        if (!r.is_zero()) e.update(monic(r, R), sug);
    }

    // Minimalize, then tail-reduce for the unique reduced basis.
    std::vector<Polynomial> kept;
    for (std::size_t a = 0; a < e.basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < e.basis.size() && !redundant; ++b) {
            if (a == b) continue;
            const Monomial& la = e.basis[a].leading_monomial();
            const Monomial& lb = e.basis[b].leading_monomial();
            if (lb.divides(la) && (lb != la || b < a)) redundant = true;
        }
        if (!redundant) kept.push_back(e.basis[a]);
    }

    std::vector<Polynomial> reduced(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t b = 0; b < kept.size(); ++b)
            if (b != a) others.push_back(kept[b]);
        reduced[a] = monic(normal_form(kept[a], others, R), R);
    }

    std::sort(reduced.begin(), reduced.end(), [&R](const Polynomial& x, const Polynomial& y) {
        return R.order().cmp(x.leading_monomial(), y.leading_monomial()) < 0;
    });

    GroebnerBasis out;
    out.elements = std::move(reduced);
    out.order = R.order();
    out.reduced = max_degree < 0;
    return out;
}

Ideal eliminate(const Ideal& I, int k, const Ring& R) {
    if (k < 0 || k >= R.nvars()) throw DimensionError("elimination block out of range");
    if (k == 0) return I;
    Ring block_ring(R.nvars(), R.field(), MonomialOrder::block_elim(k), R.names());
    std::vector<Polynomial> regens;
    regens.reserve(I.gens.size());
    for (const auto& g : I.gens) {
        std::vector<Term> ts(g.terms().begin(), g.terms().end());
        regens.push_back(Polynomial::from_terms(std::move(ts), block_ring));
    }
    GroebnerBasis gb = buchberger(Ideal::make(std::move(regens), block_ring), block_ring);

    const int m = R.nvars() - k;
    Ring sub(m, R.field(), MonomialOrder::grevlex());
    std::vector<Polynomial> pure;
    for (const auto& g : gb.elements) {
        bool x_free = true;
        for (const auto& t : g.terms()) {
            if (t.mono.block_degree(0, k) > 0) {
                x_free = false;
                break;
            }
        }
        if (!x_free) continue;
        std::vector<Term> ts;
        ts.reserve(g.term_count());
        for (const auto& t : g.terms()) {
            std::vector<int> e(m);
            for (int i = 0; i < m; ++i) e[i] = t.mono[k + i];
            ts.push_back({Monomial(m, std::span<const int>(e.data(), e.size())), t.coeff});
        }
        pure.push_back(Polynomial::from_terms(std::move(ts), sub));
    }
    return Ideal::make(std::move(pure), sub);
}

std::vector<Monomial> leading_term_ideal(const GroebnerBasis& G) {
    std::vector<Monomial> lts;
    lts.reserve(G.elements.size());
    for (const auto& g : G.elements)
        if (!g.is_zero()) lts.push_back(g.leading_monomial());
    std::vector<Monomial> minimal;
    for (std::size_t a = 0; a < lts.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < lts.size() && !redundant; ++b) {
            if (a == b) continue;
            if (lts[b].divides(lts[a]) && (lts[b] != lts[a] || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(lts[a]);
    }
    return minimal;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& G, const Ring& R) {
    return normal_form(f, G.elements, R).is_zero();
}

}  // namespace acm
