#include "pretzel/forest.hpp"

#include <algorithm>
#include <set>

#include "pretzel/errors.hpp"

namespace pretzel {

WeightedForest::WeightedForest(std::vector<Int> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
    const std::size_t n = weights_.size();
    std::set<Edge> seen;
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : edges_) {
        if (e.first >= n || e.second >= n) throw GraphError("edge endpoint out of range");
        if (e.first == e.second) throw GraphError("self-loop is not allowed");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (!seen.insert(e).second) throw GraphError("duplicate edge");
        std::size_t a = find(e.first), b = find(e.second);
        if (a == b) throw GraphError("graph contains a cycle");
        parent[a] = b;
    }
    std::sort(edges_.begin(), edges_.end());
}

std::size_t WeightedForest::valence(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& e : edges_)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<std::size_t> WeightedForest::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool WeightedForest::adjacent(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

std::vector<std::vector<std::size_t>> WeightedForest::components() const {
    const std::size_t n = size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges_) parent[find(e.first)] = find(e.second);
    std::vector<std::vector<std::size_t>> buckets(n);
    for (std::size_t v = 0; v < n; ++v) buckets[find(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& b : buckets)
        if (!b.empty()) out.push_back(std::move(b));
    return out;
}

IntMatrix incidence_matrix(const WeightedForest& f) {
    IntMatrix m(f.size(), f.size());
    for (std::size_t v = 0; v < f.size(); ++v) m.at(v, v) = f.weight(v);
    for (const auto& e : f.edges()) {
        m.at(e.first, e.second) += 1;
        m.at(e.second, e.first) += 1;
    }
    return m;
}

std::vector<std::size_t> overweight_vertices(const WeightedForest& f) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < f.size(); ++v) {
        Int minus_valence = -Int(f.valence(v));
        if (minus_valence < f.weight(v)) out.push_back(v);
    }
    return out;
}

WeightedForest blow_down(const WeightedForest& f, std::size_t v) {
    if (v >= f.size()) throw GraphError("vertex index out of range");
    if (f.weight(v) != -1) throw NotBlowDownableError("vertex weight is not -1");
    auto nbrs = f.neighbors(v);
    if (nbrs.size() > 2) throw NotBlowDownableError("vertex valence exceeds 2");

    std::vector<Int> weights;
    std::vector<std::size_t> remap(f.size());
    for (std::size_t u = 0; u < f.size(); ++u) {
        if (u == v) continue;
        remap[u] = weights.size();
        Int w = f.weight(u);
        if (std::find(nbrs.begin(), nbrs.end(), u) != nbrs.end()) w += 1;
        weights.push_back(w);
    }
    std::vector<WeightedForest::Edge> edges;
    for (const auto& e : f.edges()) {
        if (e.first == v || e.second == v) continue;
        edges.push_back({remap[e.first], remap[e.second]});
    }
    if (nbrs.size() == 2) edges.push_back({remap[nbrs[0]], remap[nbrs[1]]});
    return WeightedForest(std::move(weights), std::move(edges));
}

WeightedForest disjoint_union(const std::vector<WeightedForest>& fs) {
    std::vector<Int> weights;
    std::vector<WeightedForest::Edge> edges;
    std::size_t offset = 0;
    for (const auto& f : fs) {
        for (std::size_t v = 0; v < f.size(); ++v) weights.push_back(f.weight(v));
        for (const auto& e : f.edges()) edges.push_back({e.first + offset, e.second + offset});
        offset += f.size();
    }
    return WeightedForest(std::move(weights), std::move(edges));
}

namespace {

std::string rooted_label(const WeightedForest& f, std::size_t v, std::size_t from) {
    std::vector<std::string> kids;
    for (std::size_t u : f.neighbors(v))
        if (u != from) kids.push_back(rooted_label(f, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + f.weight(v).str();
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

// Center of a tree: peel leaves until one or two vertices remain.
std::vector<std::size_t> tree_centers(const WeightedForest& f,
                                      const std::vector<std::size_t>& comp) {
    if (comp.size() <= 2) return comp;
    std::vector<std::size_t> degree(f.size(), 0);
    std::vector<char> alive(f.size(), 0);
    for (std::size_t v : comp) {
        alive[v] = 1;
        degree[v] = f.valence(v);
    }
    std::size_t remaining = comp.size();
    std::vector<std::size_t> frontier;
    for (std::size_t v : comp)
        if (degree[v] <= 1) frontier.push_back(v);
    while (remaining > 2) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            alive[v] = 0;
            --remaining;
            for (std::size_t u : f.neighbors(v))
                if (alive[u] && --degree[u] == 1) next.push_back(u);
        }
        frontier = std::move(next);
    }
    std::vector<std::size_t> centers;
    for (std::size_t v : comp)
        if (alive[v]) centers.push_back(v);
    return centers;
}

} // namespace

std::string forest_canonical_form(const WeightedForest& f) {
    std::vector<std::string> trees;
    for (const auto& comp : f.components()) {
        std::vector<std::string> options;
        for (std::size_t c : tree_centers(f, comp))
            options.push_back(rooted_label(f, c, c));
        trees.push_back(*std::min_element(options.begin(), options.end()));
    }
    std::sort(trees.begin(), trees.end());
    std::string s;
    for (const auto& t : trees) s += t + ";";
    return s;
}

} // namespace pretzel
