#ifndef ACM_MATRIX_HPP
#define ACM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "acm/prime_field.hpp"

namespace acm {

// Dense row-major matrix over F_p. Entries are always fully reduced.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, PrimeField field);
    static Matrix identity(std::size_t n, PrimeField field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    Fp operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fp& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Fp> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Fp>& r);

    struct Echelon {
        Matrix mat;
        std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
    };

    // Unique reduced row echelon form; row space preserved.
    Echelon rref() const;

    std::size_t rank() const;

    // Canonical kernel basis from the RREF free-column convention: one vector
    // per free column f with v[f] = 1 and zeros at the other free columns.
    std::vector<std::vector<Fp>> kernel() const;

    std::vector<Fp> multiply(const std::vector<Fp>& v) const;

    Matrix transposed() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
    }

  private:
    std::size_t rows_, cols_;
    PrimeField field_;
    std::vector<Fp> a_;
};

// Reduced row echelon form of an ad-hoc row list (each row length ncols).
// Returns the nonzero RREF rows and their pivot columns.
struct RowSpan {
    std::vector<std::vector<Fp>> rows;
    std::vector<std::size_t> pivots;
};
RowSpan row_span_rref(const std::vector<std::vector<Fp>>& rows, std::size_t ncols,
                      const PrimeField& field);

// Reduces v against an RREF row set in place; returns true if v became zero.
bool reduce_against(std::vector<Fp>& v, const RowSpan& span, const PrimeField& field);

}  // namespace acm

#endif
