#pragma once

#include <json.hpp>

#include "flex/choosability.hpp"
#include "flex/configuration.hpp"
#include "flex/graph.hpp"

namespace flex {

using nlohmann::json;

// {"n": int, "edges": [[u,v],...], "rotation": [[edge-index,...],...]?,
//  "labels": [...]?}. Edge indices refer to the normalized sorted edge list.
json graph_to_json(const Graph& g);
json plane_graph_to_json(const PlaneGraph& pg);
Graph graph_from_json(const json& j);
// Requires a rotation field.
PlaneGraph plane_graph_from_json(const json& j);

// {"k": int, "vertices": [{"id", "ext_degree", "in_reduced", "in_fix"}],
//  "edges": [[u,v],...]}
json configuration_to_json(const Configuration& cfg);
Configuration configuration_from_json(const json& j);

// {"0": [colors], "1": [colors], ...}
json lists_to_json(const ListAssignment& L);
ListAssignment lists_from_json(const json& j, int n);

json reducibility_report_to_json(const ReducibilityReport& rep);

}  // namespace flex
