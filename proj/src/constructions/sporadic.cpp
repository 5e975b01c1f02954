#include <algorithm>
#include <set>
#include <stdexcept>

#include "flagcert/constructions.hpp"
#include "flagcert/graph_json.hpp"

namespace flagcert {

void validate_matching_triple(int n, const MatchingTriple& m) {
  std::vector<int> partner[3];
  for (int i = 0; i < 3; ++i) {
    partner[i].assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> head_used(static_cast<std::size_t>(n), false);
    for (auto [u, v] : m.m[i]) {
      if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("matching: vertex out of range");
      if (blowup_part(n, u) != i || blowup_part(n, v) != (i + 1) % 3)
        throw std::invalid_argument("matching " + std::to_string(i) + ": pair is not an arc V" + std::to_string(i) +
                                    " -> V" + std::to_string((i + 1) % 3));
      if (partner[i][static_cast<std::size_t>(u)] >= 0 || head_used[static_cast<std::size_t>(v)])
        throw std::invalid_argument("matching " + std::to_string(i) + ": vertex matched twice");
      partner[i][static_cast<std::size_t>(u)] = v;
      head_used[static_cast<std::size_t>(v)] = true;
    }
  }
  for (auto [x, y] : m.m[0]) {
    int z = partner[1][static_cast<std::size_t>(y)];
    if (z >= 0 && partner[2][static_cast<std::size_t>(z)] == x)
      throw std::invalid_argument("matchings: union contains a triangle");
  }
}

Graph build_En_member(int n, const MatchingTriple& m) {
  validate_matching_triple(n, m);
  Graph g = build_Bn(n);
  for (const auto& mi : m.m)
    for (auto [u, v] : mi) g.remove_edge(u, v);
  return g;
}

MatchingTriple random_matching_triple(int n, std::mt19937_64& rng) {
  std::vector<int> part[3];
  for (int v = 0; v < n; ++v) part[blowup_part(n, v)].push_back(v);
  MatchingTriple m;
  std::bernoulli_distribution keep(0.5);
  for (int i = 0; i < 3; ++i) {
    auto tails = part[i], heads = part[(i + 1) % 3];
    std::shuffle(tails.begin(), tails.end(), rng);
    std::shuffle(heads.begin(), heads.end(), rng);
    for (std::size_t j = 0; j < std::min(tails.size(), heads.size()); ++j)
      if (keep(rng)) m.m[i].emplace_back(tails[j], heads[j]);
  }
  // break triangles by dropping their V2 -> V0 pair
  std::vector<int> p0(static_cast<std::size_t>(n), -1), p1(static_cast<std::size_t>(n), -1);
  for (auto [u, v] : m.m[0]) p0[static_cast<std::size_t>(u)] = v;
  for (auto [u, v] : m.m[1]) p1[static_cast<std::size_t>(u)] = v;
  std::erase_if(m.m[2], [&](const std::pair<int, int>& e) {
    int y = p0[static_cast<std::size_t>(e.second)];
    return y >= 0 && p1[static_cast<std::size_t>(y)] == e.first;
  });
  return m;
}

Graph circulant(int n, const std::vector<int>& steps) {
  std::set<int> seen;
  for (int s : steps) {
    if (s < 1 || s >= n) throw std::invalid_argument("circulant: step out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("circulant: repeated step");
    if (seen.count(n - s)) throw std::invalid_argument("circulant: anti-parallel step pair");
  }
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int s : steps) g.add_edge(i, (i + s) % n);
  return g;
}

Graph sample_Bn_eps(int n, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("sample_Bn_eps: eps must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution drop(eps);
  Graph g = build_Bn(n);
  for (auto [u, v] : g.edges())
    if (drop(rng)) g.remove_edge(u, v);
  return g;
}

Graph build_construction(const nlohmann::json& spec) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "graph") return graph_from_json(spec);
  const int n = spec.at("n").get<int>();
  if (kind == "blowup") return build_Bn(n);
  if (kind == "circulant") return circulant(n, spec.at("steps").get<std::vector<int>>());
  if (kind == "en") {
    const auto& ms = spec.at("matchings");
    if (!ms.is_array() || ms.size() != 3) throw std::invalid_argument("en: expected three matchings");
    MatchingTriple m;
    for (std::size_t i = 0; i < 3; ++i)
      for (const auto& e : ms[i]) m.m[i].emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return build_En_member(n, m);
  }
  throw std::invalid_argument("unknown construction kind '" + kind + "'");
}

}  // namespace flagcert
