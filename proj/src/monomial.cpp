#include "acm/monomial.hpp"

#include <algorithm>

namespace acm {

Monomial::Monomial(int nvars, std::span<const int> exps) : nvars_(check_nvars(nvars)) {
    if (static_cast<int>(exps.size()) != nvars)
        throw DimensionError("exponent list length mismatch");
    int d = 0;
    for (int i = 0; i < nvars; ++i) {
        if (exps[i] < 0 || exps[i] > 255) throw Error("exponent out of range");
        e_[i] = static_cast<std::uint8_t>(exps[i]);
        d += exps[i];
    }
    if (d > 0xFFFF) throw Error("degree out of range");
    deg_ = static_cast<std::uint16_t>(d);
}

Monomial Monomial::variable(int nvars, int i, int power) {
    Monomial m(nvars);
    if (i < 0 || i >= nvars) throw DimensionError("variable index out of range");
    if (power < 0 || power > 255) throw Error("exponent out of range");
    m.e_[i] = static_cast<std::uint8_t>(power);
    m.deg_ = static_cast<std::uint16_t>(power);
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("monomial variable count mismatch");
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        int s = e_[i] + o.e_[i];
        if (s > 255) throw Error("exponent overflow");
        r.e_[i] = static_cast<std::uint8_t>(s);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("monomial variable count mismatch");
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("monomial variable count mismatch");
    Monomial r(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        if (o.e_[i] > e_[i]) throw Error("monomial division is not exact");
        r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionError("monomial variable count mismatch");
    Monomial r(a.nvars_);
    int d = 0;
    for (int i = 0; i < a.nvars_; ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("monomial variable count mismatch");
    for (int i = 0; i < nvars_; ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

int Monomial::block_degree(int lo, int hi) const {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += e_[i];
    return d;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xCBF29CE484222325ull;
    for (int i = 0; i < nvars_; ++i) {
        h ^= e_[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

namespace {

// grevlex on the index window [lo, hi), assuming equal block degrees:
// a > b iff the last nonzero entry of a - b is negative.
int grevlex_tiebreak(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw DimensionError("monomial variable count mismatch");
    const int n = a.nvars();
    switch (kind) {
        case Kind::grevlex: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return grevlex_tiebreak(a, b, 0, n);
        }
        case Kind::lex: {
            for (int i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        }
        case Kind::block: {
            const int k = block_split;
            int da = a.block_degree(0, k), db = b.block_degree(0, k);
            if (da != db) return da > db ? 1 : -1;
            if (int c = grevlex_tiebreak(a, b, 0, k)) return c;
            int ya = a.degree() - da, yb = b.degree() - db;
            if (ya != yb) return ya > yb ? 1 : -1;
            return grevlex_tiebreak(a, b, k, n);
        }
    }
    return 0;
}

}  // namespace acm
