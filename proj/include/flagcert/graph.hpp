#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagcert/rational.hpp"

namespace flagcert {

// Relation of u to v: Out means u→v, In means v→u, Both marks an undirected edge.
enum class Arc : std::uint8_t { None = 0, Out = 1, In = 2, Both = 3 };

inline Arc flip(Arc a) {
  switch (a) {
    case Arc::Out: return Arc::In;
    case Arc::In: return Arc::Out;
    default: return a;
  }
}

enum class Kind { Oriented, Undirected };

// Small oriented or undirected graph on vertices 0..n-1.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n, Kind kind = Kind::Oriented);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges, Kind kind = Kind::Oriented);

  int order() const { return n_; }
  Kind kind() const { return kind_; }
  Arc arc(int u, int v) const { return adj_[idx(u, v)]; }
  bool adjacent(int u, int v) const { return arc(u, v) != Arc::None; }
  bool has_arc(int u, int v) const { return arc(u, v) == Arc::Out || arc(u, v) == Arc::Both; }

  // Oriented: u→v, rejecting an existing v→u. Undirected: u–v.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_arc(int u, int v, Arc a);

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // (u,v) with u→v; undirected as u<v

  Graph induced(const std::vector<int>& vertices) const;
  // result vertex i is this graph's vertex perm[i]
  Graph relabeled(const std::vector<int>& perm) const;
  Graph reversed() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v); }
  void check_vertex(int v) const;

  int n_ = 0;
  Kind kind_ = Kind::Oriented;
  std::vector<Arc> adj_;
};

// Byte string of arc codes over pairs (i<j) in lexicographic order, under the
// labeling `order` (vertex order[i] becomes i).
std::string encode(const Graph& g, const std::vector<int>& order);
Graph decode(int n, const std::string& code, Kind kind);

// Minimal encoding over all n! relabelings; n ≤ 10.
std::string canonical_form(const Graph& g);
// As above, but the first `fixed` vertices keep their labels.
std::string rooted_canonical_form(const Graph& g, int fixed);

// Base-4 integer code of the graph induced on verts[0..k) in that order.
inline std::uint32_t pair_code(const Graph& g, const int* verts, int k) {
  std::uint32_t code = 0, shift = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, shift += 2)
      code |= static_cast<std::uint32_t>(g.arc(verts[i], verts[j])) << shift;
  return code;
}

// Isomorphism classes of k-vertex graphs with a dense code → class lookup.
class IsoClassTable {
 public:
  static constexpr int kMaxOrder = 5;

  IsoClassTable(int k, Kind kind);

  int order() const { return k_; }
  Kind kind() const { return kind_; }
  int size() const { return static_cast<int>(classes_.size()); }
  const Graph& graph(int id) const { return classes_[static_cast<std::size_t>(id)]; }
  const std::vector<Graph>& classes() const { return classes_; }
  const std::string& canonical(int id) const { return canon_[static_cast<std::size_t>(id)]; }

  // class id of a labeled k-vertex graph, -1 if not of this kind
  int classify_code(std::uint32_t code) const { return lookup_[code]; }
  int classify(const Graph& g) const;
  int find(const std::string& canonical) const;

 private:
  int k_;
  Kind kind_;
  std::vector<Graph> classes_;
  std::vector<std::string> canon_;
  std::vector<std::int16_t> lookup_;
};

IsoClassTable enumerate_oriented(int k);
IsoClassTable enumerate_undirected(int k);
// Shared immutable tables, built once per (k, kind).
const IsoClassTable& iso_table(int k, Kind kind = Kind::Oriented);

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// p(H, G): fraction of |H|-subsets of G inducing a copy of H.
Rational density(const Graph& h, const Graph& g);

// Induced-subgraph counts for every class of the table (index = class id).
std::vector<std::uint64_t> density_counts(const IsoClassTable& table, const Graph& g);
std::vector<std::uint64_t> density_counts_serial(const IsoClassTable& table, const Graph& g);
std::vector<Rational> density_profile(const IsoClassTable& table, const Graph& g);

struct TripleCensus {
  std::uint64_t transitive = 0;   // T3 (undirected: triangles)
  std::uint64_t independent = 0;  // I3
  std::uint64_t cyclic = 0;       // C3
  std::uint64_t mixed = 0;        // triples spanning one or two edges
  std::vector<std::uint64_t> transitive_at;   // per vertex
  std::vector<std::uint64_t> independent_at;  // per vertex

  std::uint64_t total() const { return transitive + independent + cyclic + mixed; }
};

TripleCensus triple_census(const Graph& g);
// (T3(S,G), I3(S,G)): triples containing every vertex of S.
std::pair<std::uint64_t, std::uint64_t> triples_containing(const Graph& g, const std::vector<int>& s);

Rational t_density(const Graph& g);  // t(G)
Rational i_density(const Graph& g);  // i(G)
Rational c_density(const Graph& g);  // c(G)

struct Degrees {
  int out = 0, in = 0, none = 0;  // undirected: out = degree
  friend bool operator==(const Degrees&, const Degrees&) = default;
};
std::vector<Degrees> degree_profile(const Graph& g);

struct TauResult {
  Rational value;
  Graph witness;
};

// τ(n) = min t(G)+i(G) over oriented graphs on n ≤ 6 vertices.
TauResult brute_force_tau(int n);
TauResult brute_force_tau_serial(int n);

}  // namespace flagcert
