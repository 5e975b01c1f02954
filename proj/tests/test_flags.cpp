#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "flagcert/flags.hpp"
#include "flagcert/linalg.hpp"

using namespace flagcert;

namespace {

Graph random_oriented(std::mt19937_64& rng, int n) {
  Graph g(n);
  std::uniform_int_distribution<int> d(0, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_arc(i, j, static_cast<Arc>(d(rng)));
  return g;
}

Graph blowup(int n) {
  Graph g(n);
  auto part = [n](int v) { return v < n / 3 ? 0 : v < n / 3 + (n + 1) / 3 ? 1 : 2; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (part(v) == (part(u) + 1) % 3) g.add_edge(u, v);
  return g;
}

// Oracle: is the host induced on (root, petals) isomorphic to the flag with roots fixed?
bool same_flag(const Graph& host, const std::vector<int>& root, const std::vector<int>& petals, const Flag& f) {
  std::vector<int> fp;
  for (int v = 0; v < f.graph.order(); ++v)
    if (std::find(f.roots.begin(), f.roots.end(), v) == f.roots.end()) fp.push_back(v);
  if (fp.size() != petals.size()) return false;
  for (std::size_t i = 0; i < root.size(); ++i)
    for (std::size_t j = 0; j < root.size(); ++j)
      if (i != j && host.arc(root[i], root[j]) != f.graph.arc(f.roots[i], f.roots[j])) return false;
  std::vector<int> perm(petals.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < petals.size() && ok; ++a) {
      int hv = petals[a], fv = fp[static_cast<std::size_t>(perm[a])];
      for (std::size_t r = 0; r < root.size() && ok; ++r) ok = host.arc(root[r], hv) == f.graph.arc(f.roots[r], fv);
      for (std::size_t b = 0; b < petals.size() && ok; ++b)
        if (a != b) ok = host.arc(hv, petals[b]) == f.graph.arc(fv, fp[static_cast<std::size_t>(perm[b])]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Oracle for p (disjoint) and p̃ (independent), by enumerating all injective
// root tuples and all pairs of petal sets.
Rational oracle_p(const Flag& f1, const Flag& f2, const Graph& g, bool disjoint) {
  const int k = f1.type.order(), n = g.order(), l1 = f1.petals(), l2 = f2.petals();
  std::vector<std::vector<int>> roots;
  std::vector<int> t(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int d) -> void {
    if (d == k) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i)
        for (int j = 0; j < k && ok; ++j)
          if (i != j) ok = g.arc(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]) == f1.type.graph.arc(i, j);
      if (ok) roots.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (std::find(t.begin(), t.begin() + d, v) != t.begin() + d) continue;
      t[static_cast<std::size_t>(d)] = v;
      self(self, d + 1);
    }
  };
  rec(rec, 0);
  long maps = 1;
  for (int i = 0; i < k; ++i) maps *= n - i;
  if (roots.empty()) return Rational(0);
  Rational sum(0);
  for (const auto& r : roots) {
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
      if (std::find(r.begin(), r.end(), v) == r.end()) others.push_back(v);
    std::uint64_t hits = 0, total = 0;
    for_each_subset(static_cast<int>(others.size()), l1, [&](const std::vector<int>& a) {
      for_each_subset(static_cast<int>(others.size()), l2, [&](const std::vector<int>& b) {
        std::vector<int> la, lb;
        for (int i : a) la.push_back(others[static_cast<std::size_t>(i)]);
        for (int i : b) lb.push_back(others[static_cast<std::size_t>(i)]);
        bool overlap = false;
        for (int v : la) overlap = overlap || std::find(lb.begin(), lb.end(), v) != lb.end();
        if (disjoint && overlap) return;
        ++total;
        if (same_flag(g, r, la, f1) && same_flag(g, r, lb, f2)) ++hits;
      });
    });
    if (total) sum += Rational(mpz_class(hits)) / Rational(mpz_class(total));
  }
  return sum / maps;
}

Rational c_of(const Graph& g) { return t_density(g) + i_density(g); }

}  // namespace

TEST_CASE("flag enumeration counts") {
  CHECK(enumerate_flags(empty_type(), 2).size() == 2);
  CHECK(enumerate_flags(nonedge_type(), 1).size() == 9);
  CHECK(enumerate_flags(edge_type(), 1).size() == 9);
  CHECK(enumerate_flags(vertex_type(), 1).size() == 3);
  CHECK(enumerate_flags(vertex_type(Kind::Undirected), 1).size() == 2);
  CHECK(enumerate_flags(empty_type(), 0).size() == 1);
  CHECK(enumerate_flags(vertex_type(), 2).size() == 15);
  FlagFamily f = main_family();
  CHECK(f.total_flags() == 20);
  CHECK(f.required_order() == 4);
  CHECK(vertex_family().required_order() == 3);
}

TEST_CASE("flag order within a type") {
  FlagFamily f = main_family();
  // ∅: non-edge before edge
  CHECK(f.blocks[0].flag(0).graph.edge_count() == 0);
  CHECK(f.blocks[0].flag(1).graph.edge_count() == 1);
  // the first Ē flag has an isolated petal
  const Flag& iso = f.blocks[1].flag(0);
  CHECK_FALSE(iso.graph.adjacent(2, 0));
  CHECK_FALSE(iso.graph.adjacent(2, 1));
  // vertex type: (non, out, in)
  FlagFamily v = vertex_family();
  CHECK(v.blocks[0].flag(0).graph.arc(0, 1) == Arc::None);
  CHECK(v.blocks[0].flag(1).graph.arc(0, 1) == Arc::Out);
  CHECK(v.blocks[0].flag(2).graph.arc(0, 1) == Arc::In);
  for (const auto& b : f.blocks)
    for (int i = 0; i < b.size(); ++i) CHECK(b.index_of(b.flag(i)) == i);
}

TEST_CASE("p examples") {
  FlagFamily f = main_family();
  const Flag& iso = f.blocks[1].flag(0);
  CHECK(p_flag_pair(iso, iso, Graph(5)) == 1);
  CHECK(p_tilde(iso, iso, Graph(5)) == 1);
  CHECK(p_flag_pair(iso, f.blocks[2].flag(0), Graph(5)) == 0);
  // no Ē-rooting in a tournament
  Graph t = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(p_flag_pair(iso, iso, t) == 0);
}

TEST_CASE("p and p-tilde against the brute-force oracle") {
  std::mt19937_64 rng(8);
  FlagFamily fams[] = {main_family(), vertex_family()};
  std::vector<Flag> extra = enumerate_flags(vertex_type(), 2);
  for (int it = 0; it < 12; ++it) {
    Graph g = random_oriented(rng, 4 + it % 5);
    for (const auto& fam : fams) {
      auto a = flag_matrix(fam, g), at = flag_matrix_tilde(fam, g);
      for (std::size_t b = 0; b < fam.blocks.size(); ++b) {
        const auto& blk = fam.blocks[b];
        for (int i = 0; i < blk.size(); ++i)
          for (int j = 0; j < blk.size(); ++j) {
            Rational p = oracle_p(blk.flag(i), blk.flag(j), g, true);
            Rational pt = oracle_p(blk.flag(i), blk.flag(j), g, false);
            CHECK(a.block(b).matrix(i, j) == p);
            CHECK(at.block(b).matrix(i, j) == pt);
            CHECK(p_flag_pair(blk.flag(i), blk.flag(j), g) == p);
            CHECK(p_tilde(blk.flag(i), blk.flag(j), g) == pt);
          }
      }
    }
    // flags with different petal counts
    const Flag& one = fams[1].blocks[0].flag(1);
    for (std::size_t e = 0; e < extra.size(); e += 3) {
      CHECK(p_flag_pair(one, extra[e], g) == oracle_p(one, extra[e], g, true));
      CHECK(p_tilde(extra[e], one, g) == oracle_p(extra[e], one, g, false));
    }
  }
}

TEST_CASE("parallel flag matrices match the serial reference") {
  std::mt19937_64 rng(9);
  FlagFamily f = main_family();
  for (int it = 0; it < 10; ++it) {
    Graph g = random_oriented(rng, 6 + it);
    CHECK(flag_matrix(f, g) == flag_matrix_serial(f, g));
    CHECK(flag_matrix_tilde(f, g) == flag_matrix_tilde_serial(f, g));
  }
}

TEST_CASE("vertex-type matrix matches the degree formula") {
  std::mt19937_64 rng(10);
  FlagFamily f = vertex_family();
  // our flag order is (non, out, in)
  for (int it = 0; it < 40; ++it) {
    const int n = 3 + it % 10;
    Graph g = random_oriented(rng, n);
    auto a = flag_matrix(f, g).block(0).matrix;
    auto at = flag_matrix_tilde(f, g).block(0).matrix;
    long s[3][3] = {};
    for (const auto& d : degree_profile(g)) {
      long v[3] = {d.none, d.out, d.in};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[i][j] += i == j ? v[i] * (v[i] - 1) : v[i] * v[j];
    }
    long sq[3][3] = {};
    for (const auto& d : degree_profile(g)) {
      long v[3] = {d.none, d.out, d.in};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sq[i][j] += v[i] * v[j];
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(a(i, j) == frac(s[i][j], n * (n - 1) * (n - 2)));
        CHECK(at(i, j) == frac(sq[i][j], n * (n - 1) * (n - 1)));
      }
  }
}

TEST_CASE("A_G of the seven 3-vertex classes reproduce the printed matrices") {
  // printed order of flags: (out, in, non); ours: (non, out, in)
  const long printed[7][3][3] = {
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 6}},   {{0, 0, 1}, {0, 0, 1}, {1, 1, 2}}, {{0, 0, 2}, {0, 2, 0}, {2, 0, 0}},
      {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},   {{2, 0, 0}, {0, 0, 2}, {0, 2, 0}}, {{2, 1, 0}, {1, 2, 0}, {0, 0, 0}},
      {{0, 3, 0}, {3, 0, 0}, {0, 0, 0}}};  // sixths
  const long printed_c[7] = {1, 0, 0, 0, 0, 1, 0};
  const IsoClassTable& t = iso_table(3);
  FlagFamily f = vertex_family();
  std::vector<SymMatrix<Rational>> ours;
  for (const auto& g : t.classes()) ours.push_back(flag_matrix(f, g).block(0).matrix);
  // search flag relabelings; classes must then match one-to-one
  std::vector<int> perm{0, 1, 2};
  int found = 0;
  do {
    std::vector<int> used;
    bool all = true;
    for (int p = 0; p < 7 && all; ++p) {
      int match = -1;
      for (int c = 0; c < 7 && match < 0; ++c) {
        if (std::find(used.begin(), used.end(), c) != used.end()) continue;
        if (c_of(t.graph(c)) != printed_c[p]) continue;
        bool eq = true;
        for (int i = 0; i < 3 && eq; ++i)
          for (int j = 0; j < 3 && eq; ++j)
            eq = ours[static_cast<std::size_t>(c)](perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ==
                 frac(printed[p][i][j], 6);
        if (eq) match = c;
      }
      if (match < 0) all = false;
      else used.push_back(match);
    }
    if (all) ++found;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // exactly the relabeling (out,in,non) ↦ (1,2,0) and its in/out mirror image fail or pass together
  CHECK(found >= 1);
}

TEST_CASE("A_G is the density-weighted sum of class matrices") {
  std::mt19937_64 rng(12);
  struct Setup {
    FlagFamily fam;
    int k;
  };
  std::vector<Setup> setups{{vertex_family(), 3}, {main_family(), 4}};
  for (const auto& s : setups) {
    const IsoClassTable& t = iso_table(s.k);
    std::vector<BlockSymMatrix<Rational>> ai;
    for (const auto& g : t.classes()) ai.push_back(flag_matrix(s.fam, g));
    for (int it = 0; it < 20; ++it) {
      Graph g = random_oriented(rng, 5 + it % 8);
      auto prof = density_profile(t, g);
      auto ag = flag_matrix(s.fam, g);
      for (std::size_t b = 0; b < ag.size(); ++b) {
        const int m = ag.block(b).matrix.order();
        for (int i = 0; i < m; ++i)
          for (int j = i; j < m; ++j) {
            Rational sum(0);
            for (std::size_t c = 0; c < ai.size(); ++c) sum += prof[c] * ai[c].block(b).matrix(i, j);
            CHECK(sum == ag.block(b).matrix(i, j));
          }
      }
      // law of total probability for the objective
      Rational obj(0);
      for (std::size_t c = 0; c < ai.size(); ++c) obj += prof[c] * c_of(t.graph(static_cast<int>(c)));
      CHECK(obj == c_of(g));
    }
  }
}

TEST_CASE("almost-PSD bound") {
  std::mt19937_64 rng(13);
  FlagFamily f = main_family();
  for (int it = 0; it < 20; ++it) {
    const int n = 6 + it % 7;
    Graph g = random_oriented(rng, n);
    auto a = flag_matrix(f, g), at = flag_matrix_tilde(f, g);
    for (std::size_t b = 0; b < a.size(); ++b) {
      const auto& blk = f.blocks[b];
      const int k = blk.type().order(), l = blk.petals();
      CHECK(is_psd(at.block(b).matrix));
      Rational bound = frac(l * l, n - k);
      for (int i = 0; i < blk.size(); ++i)
        for (int j = 0; j < blk.size(); ++j)
          CHECK(abs(Rational(a.block(b).matrix(i, j) - at.block(b).matrix(i, j))) <= bound);
      // Ã = (1/(n)_k) Σ_r v_r v_rᵀ
      auto roots = rootings(blk.type(), g);
      if (roots.empty()) continue;
      long maps = 1;
      for (int i = 0; i < k; ++i) maps *= n - i;
      SymMatrix<Rational> bbt(blk.size());
      for (const auto& r : roots) {
        auto v = rooted_vector(blk, g, r);
        Rational sum(0);
        for (const auto& x : v) sum += x;
        CHECK(sum == 1);
        for (int i = 0; i < blk.size(); ++i)
          for (int j = i; j < blk.size(); ++j)
            bbt.set(i, j, bbt(i, j) + v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]);
      }
      for (int i = 0; i < blk.size(); ++i)
        for (int j = i; j < blk.size(); ++j)
          CHECK(bbt(i, j) / maps == at.block(b).matrix(i, j));
    }
  }
}

TEST_CASE("rooted vectors") {
  FlagFamily f = main_family();
  const FlagBlock& ne = f.blocks[1];
  Graph b9 = blowup(9);  // parts {0,1,2}, {3,4,5}, {6,7,8}
  auto v = rooted_vector(ne, b9, {0, 1});
  // petal: same part (1), dominated by both (3), dominating both (3), out of 7
  Rational sum(0);
  std::vector<Rational> nonzero;
  for (const auto& x : v) {
    sum += x;
    if (sgn(x)) nonzero.push_back(x);
  }
  CHECK(sum == 1);
  std::sort(nonzero.begin(), nonzero.end());
  CHECK(nonzero == std::vector<Rational>{Rational(1, 7), Rational(3, 7), Rational(3, 7)});
  CHECK(v[0] == Rational(1, 7));  // isolated petal
  // every extension isomorphic gives an indicator vector
  auto e = rooted_vector(ne, Graph(4), {2, 0});
  CHECK(e[0] == 1);
  CHECK_THROWS(rooted_vector(ne, b9, {0, 3}));
  CHECK_THROWS(average_rooted_vector(ne, b9, {}));
  auto avg = average_rooted_vector(ne, b9, rootings(ne.type(), b9));
  Rational s2(0);
  for (const auto& x : avg) s2 += x;
  CHECK(s2 == 1);
}

TEST_CASE("family manifest") {
  auto j = family_manifest(main_family());
  CHECK(j["types"].size() == 3);
  CHECK(j["types"][1]["flags"].size() == 9);
  CHECK(j["types"][2]["edges"][0] == nlohmann::json::array({0, 1}));
}
