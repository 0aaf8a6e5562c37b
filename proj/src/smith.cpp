#include "pretzel/smith.hpp"

#include <algorithm>

#include "pretzel/errors.hpp"
#include "pretzel/rational_matrix.hpp"

namespace pretzel {

namespace {

// Smallest nonzero |entry| of D in the submatrix starting at (t,t); ties by
// lowest row-major index.  Returns false when the submatrix is zero.
bool locate_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int a = abs_int(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool pivot_is_lone(const IntMatrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

bool pivot_divides_rest(const IntMatrix& d, std::size_t t, std::size_t& bi, std::size_t& bj) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d.at(i, j) % d.at(t, t) != 0) {
                bi = i;
                bj = j;
                return false;
            }
    return true;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition out;
    out.u = IntMatrix::identity(rows);
    out.v = IntMatrix::identity(cols);
    out.d = m;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;
    IntMatrix& d = out.d;

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!locate_pivot(d, t, pi, pj)) break; // rest of the matrix is zero
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            // Clear the pivot row and column.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
            }
            if (!pivot_is_lone(d, t)) {
                // Remainders survived; move the new smallest entry up front.
                std::size_t qi = t, qj = t;
                locate_pivot(d, t, qi, qj);
                d.swap_rows(t, qi);
                u.swap_rows(t, qi);
                d.swap_cols(t, qj);
                v.swap_cols(t, qj);
                continue;
            }
            std::size_t bi = 0, bj = 0;
            if (pivot_divides_rest(d, t, bi, bj)) break;
            // Fold a non-divisible entry into the pivot row and repeat.
            d.add_row_multiple(t, bi, Int(1));
            u.add_row_multiple(t, bi, Int(1));
        }
        if (d.at(t, t) < 0) {
            d.scale_row(t, Int(-1));
            u.scale_row(t, Int(-1));
        }
    }

    out.invariant_factors = d.diagonal_entries();
    return out;
}

CokernelPresentation::CokernelPresentation(const IntMatrix& m) : source_(m) {
    if (!m.is_square()) throw DimensionMismatchError("cokernel presentation needs a square matrix");
    SmithDecomposition snf = smith_normal_form(m);
    all_factors_ = snf.invariant_factors;
    order_ = 1;
    for (std::size_t i = 0; i < all_factors_.size(); ++i) {
        const Int& f = all_factors_[i];
        if (f == 0) throw SingularMatrixError("cokernel of a singular matrix is infinite");
        order_ *= f;
        if (f != 1) {
            nonunit_factors_.push_back(f);
            nonunit_positions_.push_back(i);
        }
    }
    u_ = snf.u;
    u_inv_ = to_int_matrix(rational_inverse(u_));
}

std::vector<Int> CokernelPresentation::project(const std::vector<Int>& v) const {
    std::vector<Int> w = u_.apply(v);
    std::vector<Int> coords(nonunit_factors_.size());
    for (std::size_t k = 0; k < nonunit_factors_.size(); ++k) {
        const Int& f = nonunit_factors_[k];
        Int r = w[nonunit_positions_[k]] % f;
        if (r < 0) r += f;
        coords[k] = r;
    }
    return coords;
}

std::vector<Int> CokernelPresentation::coset_representative(const std::vector<Int>& coords) const {
    if (coords.size() != nonunit_factors_.size())
        throw DimensionMismatchError("coordinate tuple has wrong length");
    std::vector<Int> w(dimension(), Int(0));
    for (std::size_t k = 0; k < coords.size(); ++k) w[nonunit_positions_[k]] = coords[k];
    return u_inv_.apply(w);
}

std::vector<std::vector<Int>> CokernelPresentation::all_coordinates() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(nonunit_factors_.size(), Int(0));
    for (;;) {
        out.push_back(cur);
        std::size_t k = nonunit_factors_.size();
        while (k > 0) {
            --k;
            ++cur[k];
            if (cur[k] < nonunit_factors_[k]) break;
            cur[k] = 0;
            if (k == 0) return out;
        }
        if (nonunit_factors_.empty()) return out;
    }
}

std::vector<Int> CokernelPresentation::add_coords(const std::vector<Int>& a,
                                                  const std::vector<Int>& b) const {
    if (a.size() != nonunit_factors_.size() || b.size() != nonunit_factors_.size())
        throw DimensionMismatchError("coordinate tuple has wrong length");
    std::vector<Int> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        c[k] = (a[k] + b[k]) % nonunit_factors_[k];
        if (c[k] < 0) c[k] += nonunit_factors_[k];
    }
    return c;
}

std::vector<Int> CokernelPresentation::negate_coords(const std::vector<Int>& a) const {
    if (a.size() != nonunit_factors_.size())
        throw DimensionMismatchError("coordinate tuple has wrong length");
    std::vector<Int> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        c[k] = (-a[k]) % nonunit_factors_[k];
        if (c[k] < 0) c[k] += nonunit_factors_[k];
    }
    return c;
}

CokernelPresentation cokernel(const IntMatrix& m) { return CokernelPresentation(m); }

} // namespace pretzel
