#ifndef PRETZEL_FOREST_HPP
#define PRETZEL_FOREST_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pretzel/int_matrix.hpp"
#include "pretzel/numeric.hpp"

namespace pretzel {

// Vertex-weighted simple forest.  Construction rejects self-loops, duplicate
// edges and cycles, so every instance is a disjoint union of weighted trees.
class WeightedForest {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    WeightedForest() = default;
    WeightedForest(std::vector<Int> weights, std::vector<Edge> edges);

    std::size_t size() const { return weights_.size(); }
    const Int& weight(std::size_t v) const { return weights_[v]; }
    const std::vector<Int>& weights() const { return weights_; }
    const std::vector<Edge>& edges() const { return edges_; } // normalized i < j
    std::size_t valence(std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    bool adjacent(std::size_t a, std::size_t b) const;

    // Vertex sets of the connected components, each sorted.
    std::vector<std::vector<std::size_t>> components() const;

private:
    std::vector<Int> weights_;
    std::vector<Edge> edges_;
};

// Diagonal = weights, off-diagonal (i,j) = number of edges between i and j.
IntMatrix incidence_matrix(const WeightedForest& f);

// Vertices v with -valence(v) < weight(v).
std::vector<std::size_t> overweight_vertices(const WeightedForest& f);

// Remove a (-1)-weighted vertex of valence <= 2, bump each neighbor's weight
// by one, and join the two neighbors when there are two.
WeightedForest blow_down(const WeightedForest& f, std::size_t v);

WeightedForest disjoint_union(const std::vector<WeightedForest>& fs);

// Canonical string under weighted-graph isomorphism (rooted at tree centers);
// two forests are isomorphic iff the strings match.
std::string forest_canonical_form(const WeightedForest& f);

} // namespace pretzel

#endif
