// Exact dense linear algebra over Rational entries.
//
// Sizes here are tiny (incidence matrices and their basis submatrices, at
// most ~20 columns), so everything is done with exact arithmetic: rank and
// determinant by fraction-free Bareiss elimination, inverse and solve by
// Gauss-Jordan with exact pivots. No tolerances anywhere.

#pragma once

#include "pathbound/errors.hpp"
#include "pathbound/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pathbound {

class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t n) : entries_(n, Rational(0)) {}
    RationalVector(std::initializer_list<Rational> xs) : entries_(xs) {}
    explicit RationalVector(std::vector<Rational> xs) : entries_(std::move(xs)) {}

    std::size_t size() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const RationalVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<Rational> entries_;
};

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    // Row-major construction from integer literals, e.g. {{-1, 1}, {1, 1}}.
    static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    RationalMatrix select_columns(const std::vector<int>& cols) const;
    RationalVector column(std::size_t c) const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalVector operator*(const RationalVector& v) const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    bool all_entries_integer() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact rank via fraction-free Bareiss elimination.
int rank(const RationalMatrix& m);

// Exact determinant (Bareiss). Square input required.
Rational determinant(const RationalMatrix& m);

// Exact inverse via Gauss-Jordan. Throws SingularMatrixError naming the
// pivot column that failed.
RationalMatrix inverse(const RationalMatrix& m);

// Solve m x = v exactly. Throws SingularMatrixError on rank deficiency.
RationalVector solve(const RationalMatrix& m, const RationalVector& v);

// True iff every square submatrix has determinant in {-1, 0, 1}.
// Entries must be integers; enumeration is capped at 7x7 submatrices
// (ResourceError beyond that).
bool is_totally_unimodular(const RationalMatrix& m);

} // namespace pathbound
