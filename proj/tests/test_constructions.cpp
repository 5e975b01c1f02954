#include <doctest.h>

#include <algorithm>
#include <random>

#include "flagcert/constructions.hpp"

using namespace flagcert;

namespace {

Rational c_of(const Graph& g) { return t_density(g) + i_density(g); }

// index of the 1-petal flag whose petal (vertex 2 for two roots, 1 for one) has the given arcs to the roots
int flag_with(const FlagBlock& b, std::vector<Arc> to_petal) {
  const int k = b.type().order();
  for (int i = 0; i < b.size(); ++i) {
    bool ok = true;
    for (int r = 0; r < k; ++r) ok = ok && b.flag(i).graph.arc(r, k) == to_petal[static_cast<std::size_t>(r)];
    if (ok) return i;
  }
  return -1;
}

Vec<Rational> indicator(int size, std::vector<int> ones) {
  Vec<Rational> v(static_cast<std::size_t>(size), Rational(0));
  for (int i : ones) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

TEST_CASE("build_Bn") {
  CHECK(build_Bn(3) == Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}));
  Graph b9 = build_Bn(9);
  CHECK(t_density(b9) == 0);
  CHECK(i_density(b9) == Rational(1, 28));
  CHECK(blowup_part_sizes(10) == std::vector<int>{3, 3, 4});
  CHECK(i_density(build_Bn(10)) == Rational(1, 20));
  CHECK_THROWS(build_Bn(0));
  for (int n = 3; n <= 21; ++n) {
    Graph g = build_Bn(n);
    CHECK(independent_density_Bn(n) == i_density(g));
    CHECK(t_density(g) == 0);
    CHECK(c_of(g) < Rational(1, 9));
  }
}

TEST_CASE("limit densities of the blowup") {
  auto d4 = limit_densities_Bn(4);
  std::vector<Rational> nonzero;
  for (const auto& x : d4)
    if (sgn(x)) nonzero.push_back(x);
  std::sort(nonzero.begin(), nonzero.end());
  CHECK(nonzero == std::vector<Rational>{Rational(1, 27), Rational(4, 27), Rational(4, 27), frac(6, 27), frac(12, 27)});
  CHECK(limit_densities_Bn(1) == std::vector<Rational>{Rational(1)});

  for (int k = 2; k <= 5; ++k) {
    auto lim = limit_densities_Bn(k);
    Rational sum(0);
    for (const auto& x : lim) sum += x;
    CHECK(sum == 1);
    // finite blowups converge at rate C/m
    const IsoClassTable& t = iso_table(k);
    for (int m : {5, 10, 15}) {
      auto prof = density_profile(t, build_Bn(3 * m));
      for (std::size_t c = 0; c < lim.size(); ++c) CHECK(abs(Rational(prof[c] - lim[c])) * m <= k * k);
    }
    // copies of a class in B_{3m} form a degree-k polynomial in m; its k-th
    // difference is k!·lead, and the limit density is lead·k!/3^k
    std::vector<std::vector<std::uint64_t>> counts;
    for (int m = 1; m <= k + 2; ++m) counts.push_back(density_counts(t, build_Bn(3 * m)));
    for (std::size_t c = 0; c < lim.size(); ++c) {
      std::vector<mpz_class> d;
      for (const auto& row : counts) d.push_back(mpz_class(static_cast<unsigned long>(row[c])));
      for (int order = 1; order <= k; ++order)
        for (std::size_t i = 0; i + static_cast<std::size_t>(order) < d.size(); ++i) d[i] = d[i + 1] - d[i];
      d.resize(2);
      CHECK(d[0] == d[1]);  // (k+1)-th difference vanishes
      mpz_class p3 = 1;
      for (int i = 0; i < k; ++i) p3 *= 3;
      Rational limit(d[0], p3);
      limit.canonicalize();
      CHECK(limit == lim[c]);
    }
  }
  // 3-vertex limits: I3 1/9, cyclic 2/9, the two stars 1/3 each
  const IsoClassTable& t3 = iso_table(3);
  auto d3 = limit_densities_Bn(3);
  Rational i_lim(0), c_lim(0), t_lim(0);
  for (int c = 0; c < t3.size(); ++c) {
    auto census = triple_census(t3.graph(c));
    if (census.independent) i_lim += d3[static_cast<std::size_t>(c)];
    if (census.cyclic) c_lim += d3[static_cast<std::size_t>(c)];
    if (census.transitive) t_lim += d3[static_cast<std::size_t>(c)];
  }
  CHECK(i_lim == Rational(1, 9));
  CHECK(c_lim == Rational(2, 9));
  CHECK(t_lim == 0);
}

TEST_CASE("eps polynomial arithmetic") {
  auto e = EpsPolynomial::eps(), q = EpsPolynomial::one_minus_eps();
  CHECK((e + q) == EpsPolynomial::constant(Rational(1)));
  auto sq = pow(q, 2);
  CHECK(sq.coeffs() == std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});
  CHECK(sq.eval(Rational(1, 2)) == Rational(1, 4));
  CHECK(EpsPolynomial().order() == -1);
  CHECK((e * q).order() == 1);
  CHECK(EpsPolynomial({Rational(0), Rational(0)}).is_zero());
  CHECK(sq.to_string() == "1 + -2·ε + 1·ε^2");
}

TEST_CASE("expected densities of the random deletion") {
  for (int k = 1; k <= 4; ++k) {
    auto polys = expected_densities_Bn_eps(k);
    auto lim = limit_densities_Bn(k);
    EpsPolynomial sum;
    for (std::size_t c = 0; c < polys.size(); ++c) {
      CHECK(polys[c].eval(Rational(0)) == lim[c]);
      for (Rational e : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
        CHECK(polys[c].eval(e) >= 0);
        CHECK(polys[c].eval(e) <= 1);
      }
      sum += polys[c];
    }
    CHECK(sum == EpsPolynomial::constant(Rational(1)));
  }
  // i(B^ε) → 1/9 + 2ε²/3 + 2ε³/9 and t stays 0
  const IsoClassTable& t3 = iso_table(3);
  auto p3 = expected_densities_Bn_eps(3);
  EpsPolynomial i_poly, t_poly;
  for (int c = 0; c < t3.size(); ++c) {
    auto census = triple_census(t3.graph(c));
    if (census.independent) i_poly += p3[static_cast<std::size_t>(c)];
    if (census.transitive) t_poly += p3[static_cast<std::size_t>(c)];
  }
  CHECK(i_poly == EpsPolynomial({Rational(1, 9), Rational(0), Rational(2, 3), Rational(2, 9)}));
  CHECK(t_poly.is_zero());
  // sharp 4-vertex classes
  auto p4 = expected_densities_Bn_eps(4);
  int constant = 0, linear = 0;
  for (const auto& p : p4) {
    if (sgn(p.coeff(0)) > 0) ++constant;
    else if (sgn(p.coeff(1)) > 0) ++linear;
    CHECK(sgn(p.coeff(0)) >= 0);
  }
  CHECK(constant == 5);
  CHECK(linear == 6);
  CHECK_THROWS(expected_densities_Bn_eps(5));
}

TEST_CASE("kernel vectors of the blowup") {
  FlagFamily f = main_family();
  auto kv = limit_rooted_vectors(f);
  REQUIRE(kv.size() == 5);
  // (nonedge, edge) mass
  CHECK(kv[0].type == "empty");
  CHECK(kv[0].vector == Vec<Rational>{Rational(1), Rational(2)});

  const FlagBlock& ne = f.blocks[1];
  const FlagBlock& e = f.blocks[2];
  // Ē: petal in the same part, dominated by both, dominating both
  CHECK(kv[1].origin == "blowup");
  CHECK(kv[1].vector == indicator(9, {flag_with(ne, {Arc::None, Arc::None}), flag_with(ne, {Arc::Out, Arc::Out}),
                                      flag_with(ne, {Arc::In, Arc::In})}));
  // Ē on a deleted arc 1→2: petal z with the roots' parts, or the third part
  CHECK(kv[2].origin == "deleted-edge");
  CHECK(kv[2].vector == indicator(9, {flag_with(ne, {Arc::None, Arc::In}), flag_with(ne, {Arc::Out, Arc::None}),
                                      flag_with(ne, {Arc::In, Arc::Out})}));
  CHECK(kv[3].origin == "deleted-edge-reversed");
  CHECK(kv[3].vector == indicator(9, {flag_with(ne, {Arc::In, Arc::None}), flag_with(ne, {Arc::None, Arc::Out}),
                                      flag_with(ne, {Arc::Out, Arc::In})}));
  // the twin is the same computation with the roots swapped
  Vec<Rational> swapped(9, Rational(0));
  for (int p = 0; p < 3; ++p) {
    auto w = limit_rooted_vector(ne, {(p + 1) % 3, p}, {{1, 0}});
    for (std::size_t i = 0; i < 9; ++i) swapped[i] += w[i];
  }
  CHECK(swapped == kv[3].vector);
  // E (1→2): petal follows the cyclic pattern
  CHECK(kv[4].type == "edge");
  CHECK(kv[4].vector == indicator(9, {flag_with(e, {Arc::None, Arc::In}), flag_with(e, {Arc::Out, Arc::None}),
                                      flag_with(e, {Arc::In, Arc::Out})}));
  CHECK_THROWS(reversal_permutation(e));
  CHECK_THROWS(limit_rooted_vector(e, {0, 0}));
}

TEST_CASE("finite blowup rooted averages match the closed forms") {
  FlagFamily f = main_family();
  for (int n : {2, 3, 4}) {
    Graph g = build_Bn(3 * n);
    auto v0 = average_rooted_vector(f.blocks[0], g, rootings(f.blocks[0].type(), g));
    CHECK(v0 == Vec<Rational>{frac(n - 1, 3 * n - 1), frac(2 * n, 3 * n - 1)});
    const FlagBlock& ne = f.blocks[1];
    auto v1 = average_rooted_vector(ne, g, rootings(ne.type(), g));
    CHECK(v1[static_cast<std::size_t>(flag_with(ne, {Arc::None, Arc::None}))] == frac(n - 2, 3 * n - 2));
    CHECK(v1[static_cast<std::size_t>(flag_with(ne, {Arc::Out, Arc::Out}))] == frac(n, 3 * n - 2));
    CHECK(v1[static_cast<std::size_t>(flag_with(ne, {Arc::In, Arc::In}))] == frac(n, 3 * n - 2));
    const FlagBlock& e = f.blocks[2];
    auto v2 = average_rooted_vector(e, g, rootings(e.type(), g));
    CHECK(v2[static_cast<std::size_t>(flag_with(e, {Arc::None, Arc::In}))] == frac(n - 1, 3 * n - 2));
    CHECK(v2[static_cast<std::size_t>(flag_with(e, {Arc::Out, Arc::None}))] == frac(n - 1, 3 * n - 2));
    CHECK(v2[static_cast<std::size_t>(flag_with(e, {Arc::In, Arc::Out}))] == frac(n, 3 * n - 2));
  }
}

TEST_CASE("E_n members keep t+i") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    const int n = 9 + it % 7;
    MatchingTriple m = random_matching_triple(n, rng);
    Graph g = build_En_member(n, m);
    CHECK(c_of(g) == c_of(build_Bn(n)));
  }
  CHECK(build_En_member(9, MatchingTriple{}) == build_Bn(9));
  // parts of B_9: {0,1,2} {3,4,5} {6,7,8}
  MatchingTriple tri;
  tri.m[0] = {{0, 3}};
  tri.m[1] = {{3, 6}};
  tri.m[2] = {{6, 0}};
  CHECK_THROWS(build_En_member(9, tri));
  MatchingTriple wrong;
  wrong.m[0] = {{3, 0}};
  CHECK_THROWS(build_En_member(9, wrong));
  MatchingTriple twice;
  twice.m[0] = {{0, 3}, {0, 4}};
  CHECK_THROWS(build_En_member(9, twice));
}

TEST_CASE("circulants") {
  for (auto g : {circulant(7, {1, 3}), circulant(8, {2, 3})}) {
    auto c = triple_census(g);
    CHECK(c.transitive == 0);
    CHECK(c.independent == 0);
  }
  CHECK_THROWS(circulant(7, {1, 6}));
  CHECK_THROWS(circulant(8, {4}));
  CHECK_THROWS(circulant(5, {0}));
  CHECK_THROWS(circulant(5, {2, 2}));
}

TEST_CASE("sampled B_n^eps and construction specs") {
  CHECK(sample_Bn_eps(12, 0.0, 1) == build_Bn(12));
  CHECK(sample_Bn_eps(12, 1.0, 1).edge_count() == 0);
  CHECK(sample_Bn_eps(12, 0.3, 5) == sample_Bn_eps(12, 0.3, 5));
  CHECK_THROWS(sample_Bn_eps(12, 1.5, 1));

  using nlohmann::json;
  CHECK(build_construction(json{{"kind", "blowup"}, {"n", 9}}) == build_Bn(9));
  CHECK(build_construction(json::parse(R"({"kind":"circulant","n":7,"steps":[1,3]})")) == circulant(7, {1, 3}));
  Graph en = build_construction(json::parse(R"({"kind":"en","n":9,"matchings":[[[0,3]],[[4,7]],[]]})"));
  CHECK(en.edge_count() == build_Bn(9).edge_count() - 2);
  CHECK_THROWS(build_construction(json{{"kind", "nope"}, {"n", 3}}));
}
