#include "acm/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace acm {

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!f.is_zero() && !g.is_zero() && f.nvars() != g.nvars())
        throw DimensionError("polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Ring& R) {
    const MonomialOrder& ord = R.order();
    std::sort(terms.begin(), terms.end(),
              [&ord](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    Polynomial out(R.nvars());
    out.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (static_cast<int>(t.mono.nvars()) != R.nvars())
            throw DimensionError("term from a different ring");
        Fp c = t.coeff % R.field().p();
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coeff = R.field().add(out.terms_.back().coeff, c);
            if (out.terms_.back().coeff == 0) out.terms_.pop_back();
        } else if (c != 0) {
            out.terms_.push_back({t.mono, c});
        }
    }
    return out;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms, int nvars) {
    Polynomial out(nvars);
    out.terms_ = std::move(terms);
    return out;
}

Polynomial Polynomial::constant(Fp c, const Ring& R) {
    Polynomial out(R.nvars());
    c = c % R.field().p();
    if (c) out.terms_.push_back({Monomial(R.nvars()), c});
    return out;
}

Polynomial Polynomial::single(const Monomial& m, Fp c, int nvars) {
    Polynomial out(nvars);
    if (c) out.terms_.push_back({m, c});
    return out;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

Fp Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

Polynomial add(const Polynomial& f, const Polynomial& g, const Ring& R) {
    require_same_ring(f, g);
    const MonomialOrder& ord = R.order();
    const PrimeField& F = R.field();
    Polynomial out(R.nvars());
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        int c = ord.cmp(f.terms_[i].mono, g.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(f.terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(g.terms_[j++]);
        } else {
            Fp s = F.add(f.terms_[i].coeff, g.terms_[j].coeff);
            if (s) out.terms_.push_back({f.terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) out.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
    return out;
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const Ring& R) {
    return add(f, negate(g, R), R);
}

Polynomial negate(const Polynomial& f, const Ring& R) {
    Polynomial out = f;
    for (auto& t : out.terms_) t.coeff = R.field().neg(t.coeff);
    return out;
}

Polynomial scalar_mul(const Polynomial& f, Fp c, const Ring& R) {
    c = c % R.field().p();
    if (c == 0) return Polynomial(f.nvars() ? f.nvars() : R.nvars());
    Polynomial out = f;
    for (auto& t : out.terms_) t.coeff = R.field().mul(t.coeff, c);
    return out;
}

Polynomial mono_mul(const Polynomial& f, const Monomial& m, Fp c, const Ring& R) {
    c = c % R.field().p();
    if (c == 0) return Polynomial(f.nvars() ? f.nvars() : R.nvars());
    Polynomial out(f.nvars());
    out.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_)
        out.terms_.push_back({t.mono.times(m), R.field().mul(t.coeff, c)});
    return out;
}

Polynomial axpy(const Polynomial& f, Fp c, const Monomial& m, const Polynomial& g,
                const Ring& R) {
    require_same_ring(f, g);
    const MonomialOrder& ord = R.order();
    const PrimeField& F = R.field();
    c = c % F.p();
    Polynomial out(f.nvars() ? f.nvars() : g.nvars());
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono.times(m);
        int cv = ord.cmp(f.terms_[i].mono, gm);
        if (cv > 0) {
            out.terms_.push_back(f.terms_[i++]);
        } else if (cv < 0) {
            Fp v = F.mul(g.terms_[j].coeff, c);
            if (v) out.terms_.push_back({gm, v});
            ++j;
        } else {
            Fp s = F.add(f.terms_[i].coeff, F.mul(g.terms_[j].coeff, c));
            if (s) out.terms_.push_back({gm, s});
            ++i, ++j;
        }
    }
    for (; i < f.terms_.size(); ++i) out.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) {
        Fp v = F.mul(g.terms_[j].coeff, c);
        if (v) out.terms_.push_back({g.terms_[j].mono.times(m), v});
    }
    return out;
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const Ring& R) {
    require_same_ring(f, g);
    std::vector<Term> prods;
    prods.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_)
            prods.push_back({a.mono.times(b.mono), R.field().mul(a.coeff, b.coeff)});
    return Polynomial::from_terms(std::move(prods), R);
}

Polynomial monic(const Polynomial& f, const Ring& R) {
    if (f.is_zero()) return f;
    Fp lc = f.leading_term().coeff;
    if (lc == 1) return f;
    return scalar_mul(f, R.field().inv(lc), R);
}

Polynomial partial_derivative(const Polynomial& f, int var, const Ring& R) {
    if (var < 0 || var >= R.nvars()) throw DimensionError("variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        int e = t.mono[var];
        if (e == 0) continue;
        Fp c = R.field().mul(t.coeff, R.field().reduce(static_cast<std::uint64_t>(e)));
        if (c == 0) continue;
        terms.push_back({t.mono.divided_by(Monomial::variable(R.nvars(), var)), c});
    }
    // Division by a fixed variable preserves relative order; no re-sort needed,
    // but coefficients may have vanished mod p, so rebuild conservatively.
    return Polynomial::from_terms(std::move(terms), R);
}

Fp evaluate(const Polynomial& f, std::span<const Fp> point, const Ring& R) {
    if (static_cast<int>(point.size()) != R.nvars())
        throw DimensionError("evaluation point length mismatch");
    const PrimeField& F = R.field();
    Fp acc = 0;
    for (const auto& t : f.terms()) {
        Fp v = t.coeff;
        for (int i = 0; i < R.nvars(); ++i)
            if (t.mono[i]) v = F.mul(v, F.pow(point[i], t.mono[i]));
        acc = F.add(acc, v);
    }
    return acc;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> forms,
                      const Ring& target, const Ring& source) {
    if (static_cast<int>(forms.size()) != target.nvars())
        throw DimensionError("one substitution form per target variable required");
    Polynomial acc(source.nvars());
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(t.coeff, source);
        for (int i = 0; i < target.nvars(); ++i)
            for (int e = 0; e < t.mono[i]; ++e) prod = mul(prod, forms[i], source);
        acc = add(acc, prod, source);
    }
    return acc;
}

std::vector<Fp> coefficient_vector(const Polynomial& f, const std::vector<Monomial>& basis) {
    MonomialIndex index(basis);
    std::vector<Fp> v(basis.size(), 0);
    for (const auto& t : f.terms()) {
        int i = index.at(t.mono);
        if (i < 0) throw DimensionError("monomial outside basis");
        v[static_cast<std::size_t>(i)] = t.coeff;
    }
    return v;
}

std::string Polynomial::to_string(const Ring& R) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out += "+";
        first = false;
        out += std::to_string(t.coeff);
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            out += "*" + R.name(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const Ring& R) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty polynomial", 0);
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string chunk = s.substr(pos, plus == std::string::npos ? plus : plus - pos);
        pos = plus == std::string::npos ? s.size() + 1 : plus + 1;
        if (chunk.empty()) throw ParseError("empty term", 0);

        std::uint64_t coeff = 1;
        bool saw_coeff = false;
        std::vector<int> exps(R.nvars(), 0);
        std::size_t fpos = 0;
        while (fpos < chunk.size()) {
            std::size_t star = chunk.find('*', fpos);
            std::string factor =
                chunk.substr(fpos, star == std::string::npos ? star : star - fpos);
            fpos = star == std::string::npos ? chunk.size() : star + 1;
            if (factor.empty()) throw ParseError("empty factor in term '" + chunk + "'", 0);
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                if (saw_coeff) throw ParseError("two coefficients in term '" + chunk + "'", 0);
                std::uint64_t v = 0;
                for (char c : factor) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw ParseError("bad coefficient '" + factor + "'", 0);
                    v = (v * 10 + static_cast<std::uint64_t>(c - '0')) % R.field().p();
                }
                coeff = v;
                saw_coeff = true;
            } else {
                std::size_t caret = factor.find('^');
                std::string name = factor.substr(0, caret);
                int e = 1;
                if (caret != std::string::npos) {
                    std::string es = factor.substr(caret + 1);
                    if (es.empty()) throw ParseError("missing exponent in '" + factor + "'", 0);
                    e = 0;
                    for (char c : es) {
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            throw ParseError("bad exponent '" + es + "'", 0);
                        e = e * 10 + (c - '0');
                        if (e > 255) throw ParseError("exponent out of range", 0);
                    }
                }
                int idx = R.var_index(name);
                if (idx < 0) throw ParseError("unknown variable '" + name + "'", 0);
                exps[idx] += e;
                if (exps[idx] > 255) throw ParseError("exponent out of range", 0);
            }
        }
        terms.push_back({Monomial(R.nvars(), std::span<const int>(exps.data(), exps.size())),
                         static_cast<Fp>(coeff)});
    }
    return from_terms(std::move(terms), R);
}

}  // namespace acm
