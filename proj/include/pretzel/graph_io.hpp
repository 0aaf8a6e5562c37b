#ifndef PRETZEL_GRAPH_IO_HPP
#define PRETZEL_GRAPH_IO_HPP

#include <string>

#include <json.hpp>

#include "pretzel/forest.hpp"

namespace pretzel {

// Graph file format: {"vertices":[w0,...], "edges":[[i,j],...]} with 0-based
// indices.  Validation (cycles, duplicate edges, loops, bad indices) raises
// GraphError.
WeightedForest forest_from_json(const nlohmann::json& j);
nlohmann::json forest_to_json(const WeightedForest& f);
WeightedForest load_forest_file(const std::string& path);

} // namespace pretzel

#endif
