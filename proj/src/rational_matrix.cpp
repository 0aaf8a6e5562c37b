#include "pretzel/rational_matrix.hpp"

#include "pretzel/errors.hpp"

namespace pretzel {

RationalMatrix::RationalMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    a_.reserve(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a_.emplace_back(m.at(i, j));
}

std::vector<Rat> RationalMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw DimensionMismatchError("vector length does not match matrix");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Rat RationalMatrix::bilinear(const std::vector<Int>& v, const std::vector<Int>& w) const {
    if (v.size() != rows_ || w.size() != cols_)
        throw DimensionMismatchError("bilinear form shape mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        Rat rowsum(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (w[j] == 0) continue;
            rowsum += at(i, j) * Rat(w[j]);
        }
        acc += Rat(v[i]) * rowsum;
    }
    return acc;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RationalMatrix rational_inverse(const IntMatrix& m) {
    return rational_inverse(RationalMatrix(m));
}

RationalMatrix rational_inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix w = m;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w.at(piv, k) == 0) ++piv;
        if (piv == n) throw SingularMatrixError("matrix is singular");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        }
        const Rat pivot = w.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(k, j) /= pivot;
            inv.at(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            const Rat f = w.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

bool is_integral(const RationalMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (denominator(m.at(i, j)) != 1) return false;
    return true;
}

IntMatrix to_int_matrix(const RationalMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (denominator(m.at(i, j)) != 1)
                throw DimensionMismatchError("matrix entry is not an integer");
            out.at(i, j) = numerator(m.at(i, j));
        }
    return out;
}

} // namespace pretzel
