#ifndef PRETZEL_QUADRATIC_MIN_HPP
#define PRETZEL_QUADRATIC_MIN_HPP

#include <vector>

#include "pretzel/numeric.hpp"
#include "pretzel/rational_matrix.hpp"

namespace pretzel {

struct QuadraticMinimum {
    Rat value;
    std::vector<Int> argmin;
};

// Exact minimum of (z - c)^T M (z - c) over z in Z^n for positive definite
// rational M.  Fincke-Pohst enumeration: rational LDL decomposition turns the
// form into a weighted sum of squares, each coordinate then ranges over a
// certified interval around its conditional center, so no lattice point
// outside the search tree can beat the incumbent.
QuadraticMinimum minimize_shifted_form(const RationalMatrix& m, const std::vector<Rat>& center);

} // namespace pretzel

#endif
