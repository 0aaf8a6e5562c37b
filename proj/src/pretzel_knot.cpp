#include "pretzel/pretzel_knot.hpp"

#include <algorithm>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

void check_parameter(long long x) {
    if (x == 0) throw ZeroParameterError("pretzel parameter is zero");
    if (!is_odd(x)) throw EvenParameterError("pretzel parameter is even");
}

} // namespace

PretzelKnot normalize(long long p, long long q, long long r) {
    check_parameter(p);
    check_parameter(q);
    check_parameter(r);

    PretzelKnot k;
    int negatives = (p < 0) + (q < 0) + (r < 0);
    if (negatives >= 2) {
        p = -p;
        q = -q;
        r = -r;
        k.mirrored = true;
    }
    long long a[3] = {p, q, r};
    std::sort(a, a + 3);
    // After sorting, a negative parameter (if any) is a[0]; the middle slot
    // takes it, the outer two stay ascending.
    if (a[0] < 0) {
        k.p = a[1];
        k.q = a[0];
        k.r = a[2];
    } else {
        k.p = a[0];
        k.q = a[1];
        k.r = a[2];
    }
    return k;
}

Int pqr_sum(long long p, long long q, long long r) {
    Int P(p), Q(q), R(r);
    return P * Q + Q * R + P * R;
}

Int pqr_sum(const PretzelKnot& k) { return pqr_sum(k.p, k.q, k.r); }

Int determinant(const PretzelKnot& k) { return abs_int(pqr_sum(k)); }

int signature(const PretzelKnot& k) {
    Int det_s = pqr_sum(k); // det of [[p+q, q], [q, r+q]]
    if (det_s < 0) return 0;
    if (det_s == 0) throw SingularMatrixError("degenerate Seifert form"); // impossible for odd triples
    return (Int(k.p) + Int(k.q) > 0) ? 2 : -2;
}

AlexanderCoefficients alexander_polynomial(const PretzelKnot& k) {
    Int x = pqr_sum(k);
    AlexanderCoefficients c;
    c.a = Rat(x + 1, 4);
    c.b = Rat(x - 1, 4);
    c.trivial = (x == -1);
    return c;
}

int tau(const PretzelKnot& k) {
    if (k.p <= 0 || k.r <= 0) throw OutOfDomainError("tau needs the normalized p,r > 0 form");
    int base = (-k.q < std::min(k.p, k.r)) ? -1 : 0;
    return k.mirrored ? -base : base;
}

bool ribbon_condition(long long p, long long q, long long r) {
    return p + q == 0 || q + r == 0 || p + r == 0;
}

bool ribbon_condition(const PretzelKnot& k) { return ribbon_condition(k.p, k.q, k.r); }

std::pair<Int, Int> two_bridge_lens(long long p, long long q) {
    Int P(p), Q(q);
    return {-P * Q - P - Q, P + 1};
}

} // namespace pretzel
