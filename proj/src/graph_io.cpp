#include "pretzel/graph_io.hpp"

#include <fstream>

#include "pretzel/errors.hpp"

namespace pretzel {

WeightedForest forest_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw GraphError("graph json needs 'vertices' and 'edges'");
    std::vector<Int> weights;
    for (const auto& w : j.at("vertices")) {
        if (!w.is_number_integer()) throw GraphError("vertex weight must be an integer");
        weights.emplace_back(w.get<long long>());
    }
    std::vector<WeightedForest::Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw GraphError("edge must be a pair of indices");
        long long a = e[0].get<long long>(), b = e[1].get<long long>();
        if (a < 0 || b < 0) throw GraphError("edge index must be nonnegative");
        edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    }
    return WeightedForest(std::move(weights), std::move(edges));
}

nlohmann::json forest_to_json(const WeightedForest& f) {
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t v = 0; v < f.size(); ++v)
        verts.push_back(static_cast<long long>(f.weight(v)));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : f.edges()) edges.push_back({e.first, e.second});
    return nlohmann::json{{"vertices", verts}, {"edges", edges}};
}

WeightedForest load_forest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("invalid graph json: ") + e.what());
    }
    return forest_from_json(j);
}

} // namespace pretzel
