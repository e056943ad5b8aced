#include "lss/rational_matrix.hpp"

#include <string>

namespace lss {

RationalMatrix RationalMatrix::select_rows(const std::vector<int>& row_indices) const {
    RationalMatrix out(static_cast<int>(row_indices.size()), cols_);
    for (size_t k = 0; k < row_indices.size(); ++k) {
        int r = row_indices[k];
        if (r < 0 || r >= rows_)
            throw IndexOutOfRange("row index " + std::to_string(r));
        for (int c = 0; c < cols_; ++c) out.at(static_cast<int>(k), c) = at(r, c);
    }
    return out;
}

int RationalMatrix::rank() const {
    // Clear denominators row by row (does not change the rank), then run
    // fraction-free Bareiss elimination over the integers.
    std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
    for (int r = 0; r < rows_; ++r) {
        BigInt lcm = 1;
        for (int c = 0; c < cols_; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < cols_; ++c) {
            Rational v = at(r, c) * Rational(lcm);
            m[r][c] = v.get_num(); // denominator is now 1
        }
    }
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows_; ++r) {
            for (int c = col + 1; c < cols_; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
    // Gauss-Jordan to reduced row echelon form with exact rationals.
    std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = m[row][col];
        for (int c = col; c < cols_; ++c) m[row][c] /= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c < cols_; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

int vector_rank(const RationalMatrix& m, const std::vector<int>& rows_1based) {
    std::vector<int> idx;
    idx.reserve(rows_1based.size());
    for (int r : rows_1based) {
        if (r < 1 || r > m.rows())
            throw IndexOutOfRange("row " + std::to_string(r) + " outside 1.." +
                                  std::to_string(m.rows()));
        idx.push_back(r - 1);
    }
    return m.select_rows(idx).rank();
}

} // namespace lss
