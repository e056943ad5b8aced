#ifndef LSS_RATIONAL_MATRIX_HPP
#define LSS_RATIONAL_MATRIX_HPP

#include <gmpxx.h>

#include <vector>

#include "lss/errors.hpp"

namespace lss {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Dense matrix of exact rationals. Rows/columns are 0-based internally.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    RationalMatrix select_rows(const std::vector<int>& row_indices) const;

    /// Exact rank by fraction-free (Bareiss) elimination.
    int rank() const;

    /// Basis of the right kernel, one vector per column, from the reduced row
    /// echelon form. Basis vectors are ordered by their free column; each has
    /// a 1 in its free column. Deterministic.
    std::vector<std::vector<Rational>> nullspace() const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

/// Rank of the submatrix picking the given 1-based rows.
int vector_rank(const RationalMatrix& m, const std::vector<int>& rows_1based);

} // namespace lss

#endif
