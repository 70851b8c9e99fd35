#include "acm/matrix.hpp"

#include <algorithm>
#include <limits>

#include "acm/common.hpp"

namespace acm {

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Fp> Matrix::row(std::size_t i) const {
    return std::vector<Fp>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const std::vector<Fp>& r) {
    if (r.size() != cols_) throw DimensionError("row length mismatch");
    std::copy(r.begin(), r.end(), a_.begin() + i * cols_);
}

namespace {

// Gaussian elimination on a widened working buffer. Pivot rows are kept fully
// reduced; other rows accumulate lazily (each step adds at most (p-1)^2, and
// there are at most min(nr,nc) steps), falling back to eager reduction when
// the modulus is too large for that bound.
std::size_t eliminate_core(std::vector<std::uint64_t>& w, std::size_t nr, std::size_t nc,
                           const PrimeField& F, bool full, std::vector<std::size_t>* pivots) {
    const std::uint64_t p = F.p();
    const std::size_t steps = std::min(nr, nc);
    const std::uint64_t sq = (p - 1) * (p - 1);
    const bool lazy =
        steps == 0 || sq <= ((std::numeric_limits<std::uint64_t>::max() >> 1) - p) / steps;

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = nr;
        for (std::size_t i = r; i < nr; ++i) {
            w[i * nc + c] %= p;
            if (w[i * nc + c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr == nr) continue;
        if (pr != r)
            std::swap_ranges(w.begin() + pr * nc, w.begin() + (pr + 1) * nc, w.begin() + r * nc);

        std::uint64_t* prow = w.data() + r * nc;
        for (std::size_t k = c; k < nc; ++k) prow[k] %= p;
        if (prow[c] != 1) {
            std::uint64_t s = F.inv(static_cast<Fp>(prow[c]));
            for (std::size_t k = c; k < nc; ++k) prow[k] = prow[k] * s % p;
        }

        auto eliminate_row = [&](std::size_t i) {
            std::uint64_t* wrow = w.data() + i * nc;
            std::uint64_t f = wrow[c] % p;
            wrow[c] = 0;
            if (f == 0) return;
            std::uint64_t g = p - f;
            if (lazy) {
                for (std::size_t k = c + 1; k < nc; ++k) wrow[k] += g * prow[k];
            } else {
                for (std::size_t k = c + 1; k < nc; ++k)
                    wrow[k] = static_cast<std::uint64_t>(
                        (static_cast<unsigned __int128>(g) * prow[k] + wrow[k]) % p);
            }
        };

        if (full) {
            parallel_for(nr, [&](std::size_t b, std::size_t e) {
                for (std::size_t i = b; i < e; ++i)
                    if (i != r) eliminate_row(i);
            });
        } else {
            std::size_t below = nr - (r + 1);
            parallel_for(below, [&](std::size_t b, std::size_t e) {
                for (std::size_t i = b; i < e; ++i) eliminate_row(r + 1 + i);
            });
        }

        if (pivots) pivots->push_back(c);
        ++r;
    }
    for (auto& x : w) x %= p;
    return r;
}

}  // namespace

Matrix::Echelon Matrix::rref() const {
    std::vector<std::uint64_t> w(a_.begin(), a_.end());
    Echelon out{Matrix(rows_, cols_, field_), {}};
    eliminate_core(w, rows_, cols_, field_, true, &out.pivots);
    for (std::size_t i = 0; i < w.size(); ++i) out.mat.a_[i] = static_cast<Fp>(w[i]);
    return out;
}

std::size_t Matrix::rank() const {
    std::vector<std::uint64_t> w(a_.begin(), a_.end());
    return eliminate_core(w, rows_, cols_, field_, false, nullptr);
}

std::vector<std::vector<Fp>> Matrix::kernel() const {
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Fp>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fp> v(cols_, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = field_.neg(e.mat(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Fp> Matrix::multiply(const std::vector<Fp>& v) const {
    if (v.size() != cols_) throw DimensionError("vector length mismatch");
    std::vector<Fp> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const Fp* row = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            acc += std::uint64_t(row[j]) * v[j] % field_.p();
        }
        out[i] = field_.reduce(acc);
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RowSpan row_span_rref(const std::vector<std::vector<Fp>>& rows, std::size_t ncols,
                      const PrimeField& field) {
    Matrix m(rows.size(), ncols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    Matrix::Echelon e = m.rref();
    RowSpan out;
    out.pivots = e.pivots;
    out.rows.reserve(e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.rows.push_back(e.mat.row(i));
    return out;
}

bool reduce_against(std::vector<Fp>& v, const RowSpan& span, const PrimeField& field) {
    for (std::size_t i = 0; i < span.rows.size(); ++i) {
        Fp f = v[span.pivots[i]];
        if (f == 0) continue;
        const auto& row = span.rows[i];
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = field.sub(v[k], field.mul(f, row[k]));
    }
    return std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; });
}

}  // namespace acm
