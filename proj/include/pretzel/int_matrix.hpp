#ifndef PRETZEL_INT_MATRIX_HPP
#define PRETZEL_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pretzel/numeric.hpp"

namespace pretzel {

// Dense matrix over exact (arbitrary precision) integers, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix negated() const;

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> diagonal_entries() const;

    std::vector<Int> apply(const std::vector<Int>& v) const; // M * v

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void scale_row(std::size_t i, const Int& factor);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Direct sum, blocks along the diagonal.
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int det_exact(const IntMatrix& m);

// Sylvester's criterion: sign(det T_n) = (-1)^n for every leading principal
// minor.  Throws NotSymmetricError when the input is not symmetric.
bool is_negative_definite(const IntMatrix& m);

} // namespace pretzel

#endif
