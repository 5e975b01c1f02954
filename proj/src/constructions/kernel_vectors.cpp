#include <numeric>
#include <stdexcept>

#include "flagcert/constructions.hpp"

namespace flagcert {

namespace {

int pow3(int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

Vec<Rational> primitive(Vec<Rational> v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, x.get_den());
  for (auto& x : v) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace

Vec<Rational> limit_rooted_vector(const FlagBlock& block, const std::vector<int>& root_parts,
                                  const std::vector<std::pair<int, int>>& deleted) {
  const int k = block.type().order(), l = block.petals();
  if (static_cast<int>(root_parts.size()) != k) throw std::invalid_argument("limit_rooted_vector: wrong number of roots");
  Graph roots = pattern_graph(root_parts);
  for (auto [a, b] : deleted) roots.set_arc(a, b, Arc::None);
  if (roots != block.type().graph) throw std::invalid_argument("limit_rooted_vector: part assignment does not induce the type");

  Vec<Rational> v(static_cast<std::size_t>(block.size()), Rational(0));
  const int total = pow3(l);
  const Rational w(1, total);
  std::vector<int> parts(root_parts);
  parts.resize(static_cast<std::size_t>(k + l));
  std::vector<int> verts(static_cast<std::size_t>(k + l));
  std::iota(verts.begin(), verts.end(), 0);
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < l; ++i, c /= 3) parts[static_cast<std::size_t>(k + i)] = c % 3;
    Graph g = pattern_graph(parts);
    for (auto [a, b] : deleted) g.set_arc(a, b, Arc::None);
    v[static_cast<std::size_t>(block.classify(g, verts.data()))] += w;
  }
  return v;
}

Vec<Rational> blowup_average_vector(const FlagBlock& block) {
  const int k = block.type().order();
  Vec<Rational> acc(static_cast<std::size_t>(block.size()), Rational(0));
  long hits = 0;
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int code = 0; code < pow3(k); ++code) {
    int c = code;
    for (int i = 0; i < k; ++i, c /= 3) parts[static_cast<std::size_t>(i)] = c % 3;
    if (pattern_graph(parts) != block.type().graph) continue;
    auto v = limit_rooted_vector(block, parts);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
    ++hits;
  }
  if (hits == 0) throw std::invalid_argument("blowup_average_vector: type does not embed in the blowup");
  for (auto& x : acc) x /= hits;
  return acc;
}

std::vector<int> reversal_permutation(const FlagBlock& block) {
  if (block.type().graph.reversed() != block.type().graph)
    throw std::invalid_argument("reversal_permutation: type is not reversal invariant");
  std::vector<int> perm(static_cast<std::size_t>(block.size()));
  for (int i = 0; i < block.size(); ++i) {
    const Flag& f = block.flag(i);
    perm[static_cast<std::size_t>(i)] = block.index_of(Flag{f.type, f.graph.reversed(), f.roots});
  }
  return perm;
}

std::vector<KernelVector> limit_rooted_vectors(const FlagFamily& family) {
  std::vector<KernelVector> out;
  for (std::size_t b = 0; b < family.blocks.size(); ++b) {
    const FlagBlock& block = family.blocks[b];
    const int bi = static_cast<int>(b);
    out.push_back({block.type().name, bi, "blowup", primitive(blowup_average_vector(block))});
    if (block.type().name != "nonedge" || block.petals() != 1) continue;
    // Ē-rooting on a deleted arc root1 → root2, with ε → 0.
    Vec<Rational> v(static_cast<std::size_t>(block.size()), Rational(0));
    for (int p = 0; p < 3; ++p) {
      auto w = limit_rooted_vector(block, {p, (p + 1) % 3}, {{0, 1}});
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    }
    v = primitive(v);
    out.push_back({block.type().name, bi, "deleted-edge", v});
    auto perm = reversal_permutation(block);
    Vec<Rational> twin(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) twin[i] = v[static_cast<std::size_t>(perm[i])];
    out.push_back({block.type().name, bi, "deleted-edge-reversed", twin});
  }
  return out;
}

}  // namespace flagcert
