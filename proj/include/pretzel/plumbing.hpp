#ifndef PRETZEL_PLUMBING_HPP
#define PRETZEL_PLUMBING_HPP

#include "pretzel/forest.hpp"

namespace pretzel {

// Star-shaped plumbing tree for the double branched cover of P(p,q,r):
// central vertex of weight -3 followed by three arms carrying the negated
// continued-fraction coefficients of p/(p-1), q/(q-1), r/(r-1).  Vertex
// order: center, p-arm outward, q-arm outward, r-arm outward.
// A parameter equal to 1 contributes an empty arm.
WeightedForest pretzel_graph(long long p, long long q, long long r);

// The blown-down tree for p >= 3, q <= -3, r >= 3 (all odd): a path of
// p+r-1 vertices of weight -2 with a vertex of weight q joined to the p-th
// path vertex.  Vertex order: path left to right, then the q-vertex.
WeightedForest reduced_pretzel_graph(long long p, long long q, long long r);

} // namespace pretzel

#endif
