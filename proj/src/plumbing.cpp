#include "pretzel/plumbing.hpp"

#include "pretzel/continued_fraction.hpp"
#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

constexpr long long kMaxParameter = 1 << 20; // keeps vertex counts sane

void check_odd_nonzero(long long x) {
    if (x == 0) throw ZeroParameterError("pretzel parameter is zero");
    if (!is_odd(x)) throw EvenParameterError("pretzel parameter is even");
    if (x > kMaxParameter || x < -kMaxParameter)
        throw OutOfRangeError("pretzel parameter too large");
}

// Negated coefficients of x/(x-1); empty for x = 1.
std::vector<Int> arm_weights(long long x) {
    std::vector<Int> out;
    if (x == 1) return out;
    ContinuedFraction cf = cf_expand(Int(x), Int(x - 1));
    for (const Int& c : cf.coefficients) out.push_back(-c);
    return out;
}

} // namespace

WeightedForest pretzel_graph(long long p, long long q, long long r) {
    check_odd_nonzero(p);
    check_odd_nonzero(q);
    check_odd_nonzero(r);

    std::vector<Int> weights{Int(-3)};
    std::vector<WeightedForest::Edge> edges;
    for (long long x : {p, q, r}) {
        std::size_t prev = 0; // center
        for (const Int& w : arm_weights(x)) {
            weights.push_back(w);
            edges.push_back({prev, weights.size() - 1});
            prev = weights.size() - 1;
        }
    }
    return WeightedForest(std::move(weights), std::move(edges));
}

WeightedForest reduced_pretzel_graph(long long p, long long q, long long r) {
    check_odd_nonzero(p);
    check_odd_nonzero(q);
    check_odd_nonzero(r);
    if (p < 3 || r < 3 || q > -3)
        throw OutOfRangeError("reduced graph needs p,r >= 3 and q <= -3");

    const std::size_t path_len = static_cast<std::size_t>(p + r - 1);
    std::vector<Int> weights(path_len, Int(-2));
    weights.push_back(Int(q));
    std::vector<WeightedForest::Edge> edges;
    for (std::size_t i = 0; i + 1 < path_len; ++i) edges.push_back({i, i + 1});
    edges.push_back({static_cast<std::size_t>(p - 1), path_len}); // q-vertex at position p
    return WeightedForest(std::move(weights), std::move(edges));
}

} // namespace pretzel
