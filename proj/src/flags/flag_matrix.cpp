#include <algorithm>
#include <stdexcept>

#include "flagcert/flags.hpp"

namespace flagcert {

namespace {

// Petal sets of one rooting: the flag id of every ℓ-subset and its vertex mask.
struct PetalSets {
  std::vector<int> flag;
  std::vector<std::uint64_t> mask;
};

PetalSets petal_sets(const FlagBlock& block, const Graph& g, const std::vector<int>& root) {
  const int k = block.type().order(), l = block.petals(), n = g.order();
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (std::find(root.begin(), root.end(), v) == root.end()) others.push_back(v);
  PetalSets out;
  std::vector<int> verts(root);
  verts.resize(static_cast<std::size_t>(k + l));
  for_each_subset(static_cast<int>(others.size()), l, [&](const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int i = 0; i < l; ++i) {
      int v = others[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
      verts[static_cast<std::size_t>(k + i)] = v;
      mask |= std::uint64_t{1} << v;
    }
    out.flag.push_back(block.classify(g, verts.data()));
    out.mask.push_back(mask);
  });
  return out;
}

using Counts = std::vector<std::uint64_t>;  // m×m row-major

// Number of injective maps of the type into the host. Root maps that do not
// induce the type count as failures, which keeps A_G = Σ p(G_i,G) A_{G_i} exact.
Rational falling(int n, int k) {
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return Rational(r);
}

void accumulate(const FlagBlock& block, const Graph& g, const std::vector<int>& root, bool tilde, Counts& acc) {
  const std::size_t m = static_cast<std::size_t>(block.size());
  PetalSets ps = petal_sets(block, g, root);
  if (tilde || block.petals() == 1) {
    std::vector<std::uint64_t> cnt(m, 0);
    for (int f : ps.flag) ++cnt[static_cast<std::size_t>(f)];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        std::uint64_t pairs = cnt[a] * cnt[b];
        // with one petal the only overlapping pairs are L1 = L2
        if (!tilde && a == b) pairs -= cnt[a];
        acc[a * m + b] += pairs;
      }
    return;
  }
  for (std::size_t i = 0; i < ps.flag.size(); ++i)
    for (std::size_t j = 0; j < ps.flag.size(); ++j)
      if ((ps.mask[i] & ps.mask[j]) == 0)
        ++acc[static_cast<std::size_t>(ps.flag[i]) * m + static_cast<std::size_t>(ps.flag[j])];
}

SymMatrix<Rational> block_matrix(const FlagBlock& block, const Graph& g, bool tilde, bool parallel) {
  if (g.kind() != block.type().graph.kind()) throw std::invalid_argument("flag_matrix: graph kind mismatch");
  const int m = block.size();
  SymMatrix<Rational> out(m);
  const int free = g.order() - block.type().order();
  const int l = block.petals();
  if (free < (tilde ? l : 2 * l)) return out;
  const auto roots = rootings(block.type(), g);
  if (roots.empty()) return out;

  const std::size_t mm = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  Counts total(mm, 0);
  if (parallel) {
    const auto nroots = static_cast<std::int64_t>(roots.size());
#pragma omp parallel
    {
      Counts local(mm, 0);
#pragma omp for schedule(dynamic)
      for (std::int64_t r = 0; r < nroots; ++r) accumulate(block, g, roots[static_cast<std::size_t>(r)], tilde, local);
#pragma omp critical
      for (std::size_t i = 0; i < mm; ++i) total[i] += local[i];
    }
  } else {
    for (const auto& r : roots) accumulate(block, g, r, tilde, total);
  }

  Rational denom = falling(g.order(), block.type().order()) * binomial(free, l) *
                   (tilde ? binomial(free, l) : binomial(free - l, l));
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      out.set(a, b, Rational(mpz_class(total[static_cast<std::size_t>(a * m + b)])) / denom);
  return out;
}

BlockSymMatrix<Rational> family_matrix(const FlagFamily& family, const Graph& g, bool tilde, bool parallel) {
  std::vector<Block<Rational>> blocks;
  for (const auto& b : family.blocks) blocks.push_back({b.type().name, block_matrix(b, g, tilde, parallel)});
  return BlockSymMatrix<Rational>(std::move(blocks));
}

std::vector<int> complement_of(const std::vector<int>& root, int n) {
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (std::find(root.begin(), root.end(), v) == root.end()) others.push_back(v);
  return others;
}

bool flag_matches(const Flag& f, const Graph& g, const std::vector<int>& root, const std::vector<int>& petals) {
  std::vector<int> verts(root);
  verts.insert(verts.end(), petals.begin(), petals.end());
  std::vector<int> flag_order(f.roots);
  for (int v = 0; v < f.graph.order(); ++v)
    if (std::find(f.roots.begin(), f.roots.end(), v) == f.roots.end()) flag_order.push_back(v);
  const int k = f.type.order();
  return rooted_canonical_form(g.induced(verts), k) == rooted_canonical_form(f.graph.induced(flag_order), k);
}

Rational pair_probability(const Flag& f1, const Flag& f2, const Graph& g, bool disjoint) {
  if (f1.type.name != f2.type.name || f1.type.graph != f2.type.graph) return Rational(0);
  const int l1 = f1.petals(), l2 = f2.petals();
  const auto roots = rootings(f1.type, g);
  if (roots.empty()) return Rational(0);
  Rational sum(0);
  for (const auto& r : roots) {
    const std::vector<int> others = complement_of(r, g.order());
    const int free = static_cast<int>(others.size());
    if (free < (disjoint ? l1 + l2 : std::max(l1, l2))) continue;
    std::vector<std::vector<int>> s1, s2;
    for_each_subset(free, l1, [&](const std::vector<int>& s) {
      std::vector<int> p;
      for (int i : s) p.push_back(others[static_cast<std::size_t>(i)]);
      if (flag_matches(f1, g, r, p)) s1.push_back(p);
    });
    for_each_subset(free, l2, [&](const std::vector<int>& s) {
      std::vector<int> p;
      for (int i : s) p.push_back(others[static_cast<std::size_t>(i)]);
      if (flag_matches(f2, g, r, p)) s2.push_back(p);
    });
    std::uint64_t hits = 0;
    for (const auto& a : s1)
      for (const auto& b : s2) {
        bool overlap = std::any_of(a.begin(), a.end(), [&](int v) { return std::find(b.begin(), b.end(), v) != b.end(); });
        if (!disjoint || !overlap) ++hits;
      }
    Rational choices = binomial(free, l1) * (disjoint ? binomial(free - l1, l2) : binomial(free, l2));
    sum += Rational(mpz_class(hits)) / choices;
  }
  return sum / falling(g.order(), f1.type.order());
}

}  // namespace

Rational p_flag_pair(const Flag& f1, const Flag& f2, const Graph& g) { return pair_probability(f1, f2, g, true); }
Rational p_tilde(const Flag& f1, const Flag& f2, const Graph& g) { return pair_probability(f1, f2, g, false); }

BlockSymMatrix<Rational> flag_matrix(const FlagFamily& family, const Graph& g) {
  return family_matrix(family, g, false, true);
}
BlockSymMatrix<Rational> flag_matrix_tilde(const FlagFamily& family, const Graph& g) {
  return family_matrix(family, g, true, true);
}
BlockSymMatrix<Rational> flag_matrix_serial(const FlagFamily& family, const Graph& g) {
  return family_matrix(family, g, false, false);
}
BlockSymMatrix<Rational> flag_matrix_tilde_serial(const FlagFamily& family, const Graph& g) {
  return family_matrix(family, g, true, false);
}

Vec<Rational> rooted_vector(const FlagBlock& block, const Graph& g, const std::vector<int>& rooting) {
  if (static_cast<int>(rooting.size()) != block.type().order())
    throw std::invalid_argument("rooted_vector: rooting size does not match the type");
  std::vector<int> ids(rooting.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  if (pair_code(g, rooting.data(), block.type().order()) != pair_code(block.type().graph, ids.data(), block.type().order()))
    throw std::invalid_argument("rooted_vector: not a rooting of the type");
  PetalSets ps = petal_sets(block, g, rooting);
  Vec<Rational> v(static_cast<std::size_t>(block.size()), Rational(0));
  if (ps.flag.empty()) return v;
  for (int f : ps.flag) v[static_cast<std::size_t>(f)] += 1;
  const Rational total(static_cast<long>(ps.flag.size()));
  for (auto& x : v) x /= total;
  return v;
}

Vec<Rational> average_rooted_vector(const FlagBlock& block, const Graph& g,
                                    const std::vector<std::vector<int>>& rooting_set) {
  if (rooting_set.empty()) throw std::invalid_argument("average_rooted_vector: empty rooting set");
  Vec<Rational> acc(static_cast<std::size_t>(block.size()), Rational(0));
  for (const auto& r : rooting_set) {
    Vec<Rational> v = rooted_vector(block, g, r);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  for (auto& x : acc) x /= static_cast<long>(rooting_set.size());
  return acc;
}

}  // namespace flagcert
