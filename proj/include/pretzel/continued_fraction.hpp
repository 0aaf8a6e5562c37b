#ifndef PRETZEL_CONTINUED_FRACTION_HPP
#define PRETZEL_CONTINUED_FRACTION_HPP

#include <vector>

#include "pretzel/numeric.hpp"

namespace pretzel {

// Negative continued fraction [x1,...,xn] = x1 - 1/(x2 - 1/(... - 1/xn)).
struct ContinuedFraction {
    std::vector<Int> coefficients;
};

// Exact value of the nested expression.  Throws DivisionByZeroError when a
// tail evaluates to zero, and on an empty coefficient list.
Rat cf_eval(const ContinuedFraction& cf);

// Expansion of num/den by the ceiling algorithm: every coefficient from the
// second on is >= 2, and for values > 1 the first is too.  A negative den is
// normalized away first; gcd(num, den) must be 1.
ContinuedFraction cf_expand(Int num, Int den);

} // namespace pretzel

#endif
