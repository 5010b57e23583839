#include "pathbound/rational_linalg.hpp"

#include <algorithm>
#include <string>

namespace pathbound {

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return RationalMatrix();
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw StructuralError("ragged row in matrix literal");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rows[r][c]);
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<int>& cols) const {
    RationalMatrix out(rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const int c = cols[j];
        if (c < 0 || static_cast<std::size_t>(c) >= cols_)
            throw StructuralError("column index out of range: " + std::to_string(c));
        for (std::size_t r = 0; r < rows_; ++r) out.at(r, j) = at(r, c);
    }
    return out;
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw StructuralError("matrix product dimension mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (cols_ != v.size()) throw StructuralError("matrix-vector dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

bool RationalMatrix::all_entries_integer() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return is_integer(r); });
}

namespace {

// Bareiss fraction-free elimination on a working copy. Returns the number of
// pivots found; if det_out is non-null and the matrix is square, stores the
// determinant (the last pivot, sign-adjusted for row swaps).
int bareiss_eliminate(RationalMatrix work, Rational* det_out) {
    const std::size_t nr = work.rows(), nc = work.cols();
    Rational prev_pivot(1);
    int sign = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < nr && work.at(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == nr) continue; // no pivot in this column
        if (pivot_row != row) {
            for (std::size_t j = 0; j < nc; ++j)
                std::swap(work.at(pivot_row, j), work.at(row, j));
            sign = -sign;
        }
        const Rational pivot = work.at(row, col);
        for (std::size_t i = row + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                work.at(i, j) = (work.at(i, j) * pivot - work.at(i, col) * work.at(row, j)) / prev_pivot;
            work.at(i, col) = 0;
        }
        prev_pivot = pivot;
        ++row;
    }
    if (det_out) {
        if (row < nr) {
            *det_out = 0; // rank deficient
        } else {
            *det_out = sign * prev_pivot;
        }
    }
    return static_cast<int>(row);
}

} // namespace

int rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_eliminate(m, nullptr);
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    Rational det;
    bareiss_eliminate(m, &det);
    return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix work = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && work.at(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == n)
            throw SingularMatrixError("singular matrix: no pivot in column " +
                                      std::to_string(col + 1));
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot_row, j), work.at(col, j));
                std::swap(inv.at(pivot_row, j), inv.at(col, j));
            }
        }
        const Rational pivot = work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) /= pivot;
            inv.at(col, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            const Rational factor = work.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= factor * work.at(col, j);
                inv.at(i, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

RationalVector solve(const RationalMatrix& m, const RationalVector& v) {
    if (m.rows() != m.cols()) throw StructuralError("solve requires a square matrix");
    if (m.rows() != v.size()) throw StructuralError("solve dimension mismatch");
    const std::size_t n = m.rows();
    RationalMatrix work = m;
    RationalVector rhs = v;
    // forward elimination with exact pivots
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        while (pivot_row < n && work.at(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == n)
            throw SingularMatrixError("singular matrix: no pivot in column " +
                                      std::to_string(col + 1));
        if (pivot_row != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot_row, j), work.at(col, j));
            std::swap(rhs[pivot_row], rhs[col]);
        }
        const Rational pivot = work.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const Rational factor = work.at(i, col) / pivot;
            if (factor == 0) continue;
            for (std::size_t j = col; j < n; ++j) work.at(i, j) -= factor * work.at(col, j);
            rhs[i] -= factor * rhs[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= work.at(i, j) * x[j];
        x[i] = acc / work.at(i, i);
    }
    return x;
}

namespace {

// Enumerates k-subsets in lexicographic order; returns false when exhausted.
bool next_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

} // namespace

bool is_totally_unimodular(const RationalMatrix& m) {
    if (!m.all_entries_integer())
        throw DomainError("total unimodularity check requires integer entries");
    const int nr = static_cast<int>(m.rows());
    const int nc = static_cast<int>(m.cols());
    const int kmax = std::min(nr, nc);
    if (kmax > 7)
        throw ResourceError("total unimodularity check capped at 7x7 submatrices; matrix is " +
                            std::to_string(nr) + "x" + std::to_string(nc));
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> rows(k), cols(k);
        for (int i = 0; i < k; ++i) rows[i] = i;
        do {
            for (int i = 0; i < k; ++i) cols[i] = i;
            do {
                RationalMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
                const Rational d = determinant(sub);
                if (d != 0 && d != 1 && d != -1) return false;
            } while (next_subset(cols, nc));
        } while (next_subset(rows, nr));
    }
    return true;
}

} // namespace pathbound
