#pragma once

#include <json.hpp>

#include "flagcert/graph.hpp"

namespace flagcert {

// {"n": int, "edges": [[u,v],...]}, u→v; an optional "kind": "undirected".
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace flagcert
