#ifndef PRETZEL_SMITH_HPP
#define PRETZEL_SMITH_HPP

#include <cstddef>
#include <vector>

#include "pretzel/int_matrix.hpp"
#include "pretzel/numeric.hpp"

namespace pretzel {

// U * M * V = D with U, V unimodular and D diagonal with the divisibility
// chain d1 | d2 | ... .  invariant_factors holds the full diagonal of D
// (units and zeros included), length min(rows, cols).
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<Int> invariant_factors;
};

// Deterministic pivoting: smallest absolute value in the active submatrix,
// ties broken by lowest row-major index.
SmithDecomposition smith_normal_form(const IntMatrix& m);

// coker M = Z^n / im M for square nonsingular M, with canonical coordinates:
// one residue modulo each nonunit invariant factor, in SNF basis.
class CokernelPresentation {
public:
    explicit CokernelPresentation(const IntMatrix& m); // throws SingularMatrixError

    const IntMatrix& source() const { return source_; }
    std::size_t dimension() const { return source_.rows(); }
    Int order() const { return order_; }

    const std::vector<Int>& nonunit_factors() const { return nonunit_factors_; }
    const std::vector<Int>& invariant_factors() const { return all_factors_; }

    // Canonical coset coordinates of an integer vector; a homomorphism whose
    // kernel is exactly im M.
    std::vector<Int> project(const std::vector<Int>& v) const;

    // Some integer vector whose projection equals the given coordinates.
    std::vector<Int> coset_representative(const std::vector<Int>& coords) const;

    // All coordinate tuples in lexicographic order (the canonical class order).
    std::vector<std::vector<Int>> all_coordinates() const;

    std::vector<Int> add_coords(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> negate_coords(const std::vector<Int>& a) const;

private:
    IntMatrix source_;
    IntMatrix u_;     // from SNF
    IntMatrix u_inv_; // integer inverse of the unimodular U
    std::vector<Int> all_factors_;
    std::vector<Int> nonunit_factors_;
    std::vector<std::size_t> nonunit_positions_;
    Int order_;
};

CokernelPresentation cokernel(const IntMatrix& m);

} // namespace pretzel

#endif
