// Dense integer matrices with arbitrary-precision entries, plus the exact
// Smith normal form used to present quotient lattices.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace workbench {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const mpz_class& f);  // row dst += f * row src
    void add_col_multiple(int dst, int src, const mpz_class& f);
    void negate_row(int i);

    // Fraction-free (Bareiss) elimination; exact.
    mpz_class determinant() const;  // square matrices only
    int rank() const;

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SmithDecomposition {
    IntMatrix U, D, V;  // U * A * V = D, |det U| = |det V| = 1, d1 | d2 | ... >= 0
};

// Deterministic for fixed input: the pivot is the smallest nonzero absolute
// value in the remaining submatrix, ties broken row-major.
SmithDecomposition smith_normal_form(const IntMatrix& A);

}  // namespace workbench
