#ifndef PRETZEL_PRETZEL_KNOT_HPP
#define PRETZEL_PRETZEL_KNOT_HPP

#include <utility>

#include "pretzel/numeric.hpp"

namespace pretzel {

// Normalized odd pretzel triple.  The stored form has p, r > 0 with p <= r
// and at most one negative parameter, sitting in the middle slot; mirrored
// records whether normalization replaced the knot by its mirror.
struct PretzelKnot {
    long long p = 1;
    long long q = 1;
    long long r = 1;
    bool mirrored = false;

    friend bool operator==(const PretzelKnot& a, const PretzelKnot& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r && a.mirrored == b.mirrored;
    }
};

// Applies the pretzel symmetries (all permutations, optionally the mirror)
// to reach the normal form above.  Throws on even or zero parameters.
PretzelKnot normalize(long long p, long long q, long long r);

// pq + qr + pr, the quantity behind the determinant, signature and Alexander
// polynomial.  Exact regardless of parameter size.
Int pqr_sum(const PretzelKnot& k);
Int pqr_sum(long long p, long long q, long long r);

// |pq + qr + pr|
Int determinant(const PretzelKnot& k);

// Signature of S = [[p+q, q], [q, r+q]] for the stored triple.
int signature(const PretzelKnot& k);

// Delta(t) = a (t^2 + 1) - 2 b t, normalized so Delta(1) = 1.
struct AlexanderCoefficients {
    Rat a;
    Rat b;
    bool trivial; // Delta is a unit
};
AlexanderCoefficients alexander_polynomial(const PretzelKnot& k);

// Value of the tau invariant for the original (pre-normalization) knot;
// computed on the stored triple and sign-flipped through the mirrored flag.
int tau(const PretzelKnot& k);

// p+q = 0 or q+r = 0 or p+r = 0; invariant under all symmetries.
bool ribbon_condition(long long p, long long q, long long r);
bool ribbon_condition(const PretzelKnot& k);

// Lens space parameters (-pq-p-q, p+1) of the double branched cover of
// P(p,q,1).
std::pair<Int, Int> two_bridge_lens(long long p, long long q);

} // namespace pretzel

#endif
