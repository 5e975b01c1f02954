#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "flagcert/graph.hpp"
#include "flagcert/graph_json.hpp"

using namespace flagcert;

namespace {

Graph cyclic_triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}); }
Graph transitive_triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

// balanced blowup of the cyclic triangle, built independently of the constructions module
Graph blowup(int n) {
  Graph g(n);
  auto part = [n](int v) { return v < n / 3 ? 0 : v < n / 3 + (n + 1) / 3 ? 1 : 2; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (part(v) == (part(u) + 1) % 3) g.add_edge(u, v);
  return g;
}

Graph circulant_graph(int n, const std::vector<int>& steps) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int s : steps) g.add_edge(i, (i + s) % n);
  return g;
}

Graph random_oriented(std::mt19937_64& rng, int n) {
  Graph g(n);
  std::uniform_int_distribution<int> d(0, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_arc(i, j, static_cast<Arc>(d(rng)));
  return g;
}

Graph random_undirected(std::mt19937_64& rng, int n) {
  Graph g(n, Kind::Undirected);
  std::bernoulli_distribution e(0.5);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("graph invariants") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.arc(1, 0) == Arc::In);
  CHECK_THROWS(g.add_edge(1, 0));
  CHECK_THROWS(g.add_edge(2, 2));
  CHECK_THROWS(Graph(65));
  CHECK(g.reversed().arc(0, 1) == Arc::In);
  Graph u(3, Kind::Undirected);
  u.add_edge(2, 1);
  CHECK(u.arc(1, 2) == Arc::Both);
  CHECK(u.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(Graph::from_edges(2, {{0, 1}})) == canonical_form(Graph::from_edges(2, {{1, 0}})));
  CHECK(canonical_form(cyclic_triangle()) != canonical_form(transitive_triangle()));
  // (3,1,0) patterns: three vertices into one vs one into three
  Graph in_star = Graph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
  Graph out_star = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
  CHECK(canonical_form(in_star) != canonical_form(out_star));
  CHECK_THROWS(canonical_form(Graph(11)));
}

TEST_CASE("canonical_form is permutation invariant") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> size(1, 7);
  for (int it = 0; it < 500; ++it) {
    Graph g = random_oriented(rng, size(rng));
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(g.relabeled(perm)));
  }
}

TEST_CASE("enumeration counts") {
  const int oriented[] = {1, 2, 7, 42, 582};
  const int undirected[] = {1, 2, 4, 11, 34};
  for (int k = 1; k <= 5; ++k) {
    CHECK(enumerate_oriented(k).size() == oriented[k - 1]);
    CHECK(enumerate_undirected(k).size() == undirected[k - 1]);
  }
  CHECK_THROWS(enumerate_oriented(6));
  CHECK_THROWS(enumerate_oriented(0));
}

TEST_CASE("class ordering and lookup") {
  const IsoClassTable& t = iso_table(4);
  for (int i = 0; i + 1 < t.size(); ++i) {
    int a = t.graph(i).edge_count(), b = t.graph(i + 1).edge_count();
    CHECK((a < b || (a == b && t.canonical(i) < t.canonical(i + 1))));
  }
  CHECK(t.graph(0).edge_count() == 0);
  for (int i = 0; i < t.size(); ++i) {
    CHECK(t.classify(t.graph(i)) == i);
    CHECK(canonical_form(t.graph(i)) == t.canonical(i));
  }
  // the last four classes are the tournaments
  for (int i = 38; i < 42; ++i) CHECK(t.graph(i).edge_count() == 6);
  CHECK(t.graph(37).edge_count() == 5);
}

TEST_CASE("density examples") {
  Graph b9 = blowup(9);
  CHECK(density(transitive_triangle(), b9) == 0);
  CHECK(density(Graph(3), b9) == Rational(1, 28));
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    Graph g = random_oriented(rng, 6);
    CHECK(density(g, g) == 1);
  }
  CHECK(density(Graph(5), Graph(4)) == 0);
  // large H falls back to canonical comparison
  Graph g7 = random_oriented(rng, 7);
  CHECK(density(g7, g7) == 1);
  Graph h6 = g7.induced({0, 1, 2, 3, 4, 5});
  int hits = 0;
  for_each_subset(7, 6, [&](const std::vector<int>& s) { hits += canonical_form(g7.induced(s)) == canonical_form(h6); });
  CHECK(density(h6, g7) == Rational(hits, 7));
}

TEST_CASE("density profile sums to one; parallel matches serial") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_oriented(rng, 5 + it % 9);
    for (int k = 1; k <= 5; ++k) {
      const IsoClassTable& t = iso_table(k);
      auto par = density_counts(t, g), ser = density_counts_serial(t, g);
      CHECK(par == ser);
      Rational sum(0);
      for (const auto& p : density_profile(t, g)) sum += p;
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("triple census examples") {
  auto c = triple_census(cyclic_triangle());
  CHECK(c.transitive == 0);
  CHECK(c.independent == 0);
  CHECK(c.cyclic == 1);
  auto b = triple_census(blowup(9));
  CHECK(b.transitive == 0);
  CHECK(b.independent == 3);
  CHECK(b.cyclic == 27);
  auto c7 = triple_census(circulant_graph(7, {1, 3}));
  CHECK(c7.transitive == 0);
  CHECK(c7.independent == 0);
  CHECK_THROWS(triple_census(Graph(2)));

  std::mt19937_64 rng(4);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_oriented(rng, 3 + it % 8);
    auto census = triple_census(g);
    CHECK(census.total() == binomial(g.order(), 3));
    std::uint64_t t_sum = 0, i_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      auto [t, i] = triples_containing(g, {v});
      CHECK(t == census.transitive_at[static_cast<std::size_t>(v)]);
      CHECK(i == census.independent_at[static_cast<std::size_t>(v)]);
      t_sum += t;
      i_sum += i;
    }
    CHECK(t_sum == 3 * census.transitive);
    CHECK(i_sum == 3 * census.independent);
    // triple densities agree with 3-vertex class densities
    const IsoClassTable& t3 = iso_table(3);
    auto prof = density_profile(t3, g);
    Rational t_from(0), i_from(0);
    for (int k = 0; k < t3.size(); ++k) {
      auto cc = triple_census(t3.graph(k));
      if (cc.transitive) t_from += prof[static_cast<std::size_t>(k)];
      if (cc.independent) i_from += prof[static_cast<std::size_t>(k)];
    }
    CHECK(t_from == t_density(g));
    CHECK(i_from == i_density(g));
  }
}

TEST_CASE("degree profile") {
  for (const auto& d : degree_profile(cyclic_triangle())) CHECK(d == Degrees{1, 1, 0});
  for (const auto& d : degree_profile(blowup(9))) CHECK(d == Degrees{3, 3, 2});
  auto e = degree_profile(Graph::from_edges(2, {{0, 1}}));
  CHECK(e[0] == Degrees{1, 0, 0});
  CHECK(e[1] == Degrees{0, 1, 0});
}

TEST_CASE("Goodman degree identities on undirected graphs") {
  std::mt19937_64 rng(5);
  const IsoClassTable& u3 = iso_table(3, Kind::Undirected);  // indexed by edge count
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + it % 13;
    Graph g = random_undirected(rng, n);
    auto deg = degree_profile(g);
    auto prof = density_profile(u3, g);
    Rational c3 = binomial(n, 3);
    Rational lhs(0), sq(0);
    for (const auto& d : deg) {
      lhs += Rational(d.out * (n - 1 - d.out));
      sq += Rational(d.out * d.out);
    }
    lhs /= c3;
    CHECK(lhs == 2 * prof[1] + 2 * prof[2]);
    const Rational m(g.edge_count());
    auto census = triple_census(g);
    Rational delta_sum = Rational(mpz_class(census.transitive + census.independent)) / c3;
    CHECK(delta_sum == prof[0] + prof[3]);
    CHECK(delta_sum == 1 - 6 * m / Rational(n * (n - 2)) + sq / (2 * c3));
  }
}

TEST_CASE("cyclic triangle bounds from degrees") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 200; ++it) {
    const int n = 3 + it % 13;
    Graph g = random_oriented(rng, n);
    Rational c3 = binomial(n, 3), prod(0), sq(0);
    for (const auto& d : degree_profile(g)) {
      prod += Rational(d.out * d.in);
      sq += Rational((d.out + d.in) * (d.out + d.in));
    }
    Rational bound = prod / (3 * c3);
    CHECK(c_density(g) <= bound);
    CHECK(t_density(g) / 3 + c_density(g) <= bound);
    CHECK(bound <= sq / (12 * c3));
  }
}

TEST_CASE("brute force tau") {
  auto t3 = brute_force_tau(3);
  CHECK(t3.value == 0);
  CHECK(t_density(t3.witness) + i_density(t3.witness) == 0);
  auto t4 = brute_force_tau(4);
  CHECK(t4.value == 0);
  auto t5 = brute_force_tau(5);
  auto s5 = brute_force_tau_serial(5);
  CHECK(t5.value == s5.value);
  CHECK(t5.witness == s5.witness);
  // oracle: minimum over the 582 isomorphism classes
  Rational best(1);
  for (const auto& g : iso_table(5).classes()) best = std::min(best, Rational(t_density(g) + i_density(g)));
  CHECK(t5.value == best);
  CHECK(t_density(t5.witness) + i_density(t5.witness) == t5.value);
  // the directed 5-cycle has neither triangles nor independent triples
  CHECK(t5.value == 0);
  CHECK(t3.value <= t4.value);
  CHECK(t4.value <= t5.value);
  CHECK_THROWS(brute_force_tau(7));
}

TEST_CASE("graph JSON round trip") {
  Graph g = Graph::from_edges(4, {{0, 1}, {2, 1}, {3, 0}});
  auto j = graph_to_json(g);
  CHECK(j["n"] == 4);
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{0, 1}, {1, 0}}}}));
}
