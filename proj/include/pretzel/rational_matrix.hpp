#ifndef PRETZEL_RATIONAL_MATRIX_HPP
#define PRETZEL_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "pretzel/int_matrix.hpp"
#include "pretzel/numeric.hpp"

namespace pretzel {

// Dense matrix over exact rationals.  boost keeps each entry reduced with a
// positive denominator, so values are always in normal form.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    explicit RationalMatrix(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    // v^T M w for integer vectors, exact.
    Rat bilinear(const std::vector<Int>& v, const std::vector<Int>& w) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Exact inverse via Gauss-Jordan.  Throws SingularMatrixError when det = 0.
RationalMatrix rational_inverse(const IntMatrix& m);
RationalMatrix rational_inverse(const RationalMatrix& m);

// True when every entry is an integer.
bool is_integral(const RationalMatrix& m);
IntMatrix to_int_matrix(const RationalMatrix& m);

} // namespace pretzel

#endif
