#include "pretzel/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "pretzel/errors.hpp"

namespace pretzel {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatchError("ragged initializer for IntMatrix");
        for (const auto& x : r) a_.push_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix t(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) t.a_[i] = -a_[i];
    return t;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Int> IntMatrix::diagonal_entries() const {
    std::vector<Int> d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = at(i, i);
    return d;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw DimensionMismatchError("vector length does not match matrix");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntMatrix::scale_row(std::size_t i, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) *= factor;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix sum shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix difference shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMatrix m(r, c);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

Int det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatchError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            w.swap_rows(k, piv);
            sign = -sign;
        }
        const Int pivot = w.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * pivot - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

bool is_negative_definite(const IntMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetricError("negative definiteness needs a symmetric matrix");
    const std::size_t n = m.rows();
    // Pivotless Bareiss: after step k the (k,k) entry is det T_{k+1} exactly,
    // so the leading minors fall out of the sweep.  A zero or wrongly signed
    // pivot fails the criterion and ends the sweep.
    IntMatrix w = m;
    Int prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        const Int& minor = w.at(k, k); // det T_{k+1}
        bool want_negative = (k % 2 == 0);
        if (minor == 0 || (minor < 0) != want_negative) return false;
        if (k + 1 == n) break;
        const Int pivot = minor;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * pivot - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = pivot;
    }
    return true;
}

} // namespace pretzel
