#ifndef PRETZEL_NUMERIC_HPP
#define PRETZEL_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "pretzel/errors.hpp"

namespace pretzel {

// All arithmetic in the library is exact.  Obstructions are equality and
// sign decisions, so there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_odd(const Int& n) { return (n % 2) != 0; }
inline bool is_odd(long long n) { return (n % 2) != 0; }

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw OutOfRangeError("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

// sqrt(n) when n is a perfect square, nothing otherwise.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// boost's (num, den) constructor insists on den > 0; this one normalizes.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw DivisionByZeroError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int quo = n / d, rem = n % d;
    if (rem != 0 && n < 0) --quo;
    return quo;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

// Nearest integer, ties toward +infinity.  Any deterministic rounding works
// where this is used (seeding lattice searches).
inline Int round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

} // namespace pretzel

#endif
