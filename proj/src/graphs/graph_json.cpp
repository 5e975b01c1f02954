#include "flagcert/graph_json.hpp"

#include <stdexcept>

namespace flagcert {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json j = {{"n", g.order()}, {"edges", edges}};
  if (g.kind() == Kind::Undirected) j["kind"] = "undirected";
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("graph JSON needs an \"n\" field");
  Kind kind = Kind::Oriented;
  if (j.contains("kind")) {
    const auto k = j.at("kind").get<std::string>();
    if (k == "undirected") kind = Kind::Undirected;
    else if (k != "oriented") throw std::invalid_argument("unknown graph kind '" + k + "'");
  }
  Graph g(j.at("n").get<int>(), kind);
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [u,v] pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  return g;
}

}  // namespace flagcert
