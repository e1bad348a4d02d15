#include "workbench/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace workbench {

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& f) {
    if (f == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& f) {
    if (f == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

namespace {

// Bareiss elimination; returns the list of pivots and, for square input, the
// determinant (sign-tracked).
struct BareissResult {
    int rank = 0;
    mpz_class det = 1;
    bool det_valid = true;
};

BareissResult bareiss(IntMatrix m) {
    BareissResult res;
    const int rows = m.rows(), cols = m.cols();
    mpz_class prev = 1;
    int row = 0;
    int sign = 1;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            res.det_valid = false;  // zero column before full rank
            continue;
        }
        if (pivot != row) {
            m.swap_rows(pivot, row);
            sign = -sign;
        }
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                mpz_class num = m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = q;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
        ++res.rank;
    }
    if (rows == cols && res.rank == rows) {
        res.det = sign * m.at(rows - 1, rows - 1);
    } else {
        res.det = 0;
    }
    return res;
}

}  // namespace

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::logic_error("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    return bareiss(*this).det;
}

int IntMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return bareiss(*this).rank;
}

namespace {

bool pivot_cleared(const IntMatrix& d, int s) {
    for (int i = s + 1; i < d.rows(); ++i)
        if (d.at(i, s) != 0) return false;
    for (int j = s + 1; j < d.cols(); ++j)
        if (d.at(s, j) != 0) return false;
    return true;
}

// Smallest nonzero |entry| in the trailing submatrix; ties row-major.
bool find_pivot(const IntMatrix& d, int s, int& pi, int& pj) {
    bool found = false;
    mpz_class best;
    for (int i = s; i < d.rows(); ++i)
        for (int j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            mpz_class a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    const int rows = A.rows(), cols = A.cols();
    SmithDecomposition out{IntMatrix::identity(rows), A, IntMatrix::identity(cols)};
    IntMatrix& U = out.U;
    IntMatrix& D = out.D;
    IntMatrix& V = out.V;

    const int steps = std::min(rows, cols);
    for (int s = 0; s < steps; ++s) {
        int pi = s, pj = s;
        if (!find_pivot(D, s, pi, pj)) break;  // trailing submatrix is zero
        D.swap_rows(s, pi);
        U.swap_rows(s, pi);
        D.swap_cols(s, pj);
        V.swap_cols(s, pj);

        for (;;) {
            // Euclidean reduction of column s and row s against the pivot.
            while (!pivot_cleared(D, s)) {
                for (int i = s + 1; i < rows; ++i) {
                    if (D.at(i, s) == 0) continue;
                    mpz_class q = D.at(i, s) / D.at(s, s);  // truncated: |remainder| < |pivot|
                    D.add_row_multiple(i, s, -q);
                    U.add_row_multiple(i, s, -q);
                }
                for (int j = s + 1; j < cols; ++j) {
                    if (D.at(s, j) == 0) continue;
                    mpz_class q = D.at(s, j) / D.at(s, s);
                    D.add_col_multiple(j, s, -q);
                    V.add_col_multiple(j, s, -q);
                }
                int qi = s, qj = s;
                if (find_pivot(D, s, qi, qj) && (qi != s || qj != s)) {
                    D.swap_rows(s, qi);
                    U.swap_rows(s, qi);
                    D.swap_cols(s, qj);
                    V.swap_cols(s, qj);
                }
            }
            // Divisibility fixup: fold in any entry the pivot does not divide.
            int bi = -1, bj = -1;
            for (int i = s + 1; i < rows && bi < 0; ++i)
                for (int j = s + 1; j < cols; ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            D.add_row_multiple(s, bi, 1);
            U.add_row_multiple(s, bi, 1);
        }
        if (D.at(s, s) < 0) {
            D.negate_row(s);
            U.negate_row(s);
        }
    }
    return out;
}

}  // namespace workbench
