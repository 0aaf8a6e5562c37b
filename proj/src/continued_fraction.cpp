#include "pretzel/continued_fraction.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "pretzel/errors.hpp"

namespace pretzel {

Rat cf_eval(const ContinuedFraction& cf) {
    if (cf.coefficients.empty()) throw DivisionByZeroError("empty continued fraction");
    Rat value(cf.coefficients.back());
    for (std::size_t k = cf.coefficients.size() - 1; k-- > 0;) {
        if (value == 0) throw DivisionByZeroError("continued fraction tail evaluates to zero");
        value = Rat(cf.coefficients[k]) - 1 / value;
    }
    return value;
}

ContinuedFraction cf_expand(Int num, Int den) {
    if (den == 0) throw InvalidFractionError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (boost::integer::gcd(abs_int(num), den) != 1)
        throw InvalidFractionError("fraction is not reduced");

    ContinuedFraction cf;
    for (;;) {
        // ceil(num/den)
        Int q = num / den;
        if (num % den != 0 && num > 0) ++q;
        cf.coefficients.push_back(q);
        Int rem = q * den - num; // 0 <= rem < den
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    return cf;
}

} // namespace pretzel
