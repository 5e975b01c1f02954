#include <stdexcept>

#include "flagcert/graph.hpp"

namespace flagcert {

Graph::Graph(int n, Kind kind) : n_(n), kind_(kind) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("Graph: order out of range");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Arc::None);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges, Kind kind) {
  Graph g(n, kind);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
}

void Graph::set_arc(int u, int v, Arc a) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    if (a != Arc::None) throw std::invalid_argument("Graph: loops are not allowed");
    return;
  }
  if (kind_ == Kind::Undirected && a != Arc::None && a != Arc::Both)
    throw std::invalid_argument("Graph: directed arc in an undirected graph");
  if (kind_ == Kind::Oriented && a == Arc::Both)
    throw std::invalid_argument("Graph: anti-parallel pair in an oriented graph");
  adj_[idx(u, v)] = a;
  adj_[idx(v, u)] = flip(a);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  if (kind_ == Kind::Undirected) {
    set_arc(u, v, Arc::Both);
    return;
  }
  if (arc(u, v) == Arc::In)
    throw std::invalid_argument("Graph: edge " + std::to_string(u) + "->" + std::to_string(v) +
                                " would be anti-parallel");
  set_arc(u, v, Arc::Out);
}

void Graph::remove_edge(int u, int v) { set_arc(u, v, Arc::None); }

int Graph::edge_count() const {
  int m = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) ++m;
  return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      Arc a = arc(u, v);
      if (a == Arc::Out || (a == Arc::Both && u < v)) out.emplace_back(u, v);
    }
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(static_cast<int>(vertices.size()), kind_);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      g.set_arc(static_cast<int>(i), static_cast<int>(j), arc(vertices[i], vertices[j]));
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("Graph::relabeled: wrong size");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int p : perm) {
    check_vertex(p);
    if (seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("Graph::relabeled: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  return induced(perm);
}

Graph Graph::reversed() const {
  Graph g(n_, kind_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) g.set_arc(u, v, flip(arc(u, v)));
  return g;
}

}  // namespace flagcert
