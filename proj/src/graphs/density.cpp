#include <stdexcept>

#include "flagcert/graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flagcert {

namespace {

void check_table(const IsoClassTable& table, const Graph& g) {
  if (g.kind() != table.kind()) throw std::invalid_argument("density_counts: graph kind does not match table");
}

}  // namespace

std::vector<std::uint64_t> density_counts_serial(const IsoClassTable& table, const Graph& g) {
  check_table(table, g);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(table.size()), 0);
  const int k = table.order();
  for_each_subset(g.order(), k, [&](const std::vector<int>& s) {
    ++counts[static_cast<std::size_t>(table.classify_code(pair_code(g, s.data(), k)))];
  });
  return counts;
}

std::vector<std::uint64_t> density_counts(const IsoClassTable& table, const Graph& g) {
  check_table(table, g);
  const int n = g.order(), k = table.order();
  const std::size_t m = static_cast<std::size_t>(table.size());
  std::vector<std::uint64_t> counts(m, 0);
  if (k > n) return counts;
  // Partition by the smallest vertex of the subset.
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(m, 0);
    std::vector<int> verts(static_cast<std::size_t>(k));
#pragma omp for schedule(dynamic)
    for (int v0 = 0; v0 <= n - k; ++v0) {
      verts[0] = v0;
      const int rest = n - v0 - 1;
      for_each_subset(rest, k - 1, [&](const std::vector<int>& s) {
        for (int i = 0; i < k - 1; ++i) verts[static_cast<std::size_t>(i + 1)] = v0 + 1 + s[static_cast<std::size_t>(i)];
        ++local[static_cast<std::size_t>(table.classify_code(pair_code(g, verts.data(), k)))];
      });
    }
#pragma omp critical
    for (std::size_t i = 0; i < m; ++i) counts[i] += local[i];
  }
  return counts;
}

std::vector<Rational> density_profile(const IsoClassTable& table, const Graph& g) {
  std::vector<std::uint64_t> counts = density_counts(table, g);
  Rational total = binomial(g.order(), table.order());
  std::vector<Rational> out;
  out.reserve(counts.size());
  for (auto c : counts) out.push_back(sgn(total) == 0 ? Rational(0) : Rational(mpz_class(c)) / total);
  return out;
}

Rational density(const Graph& h, const Graph& g) {
  const int k = h.order(), n = g.order();
  if (k > n) return Rational(0);
  if (h.kind() != g.kind()) throw std::invalid_argument("density: graph kinds differ");
  if (k == 0) return Rational(1);
  if (k <= IsoClassTable::kMaxOrder) {
    const IsoClassTable& table = iso_table(k, g.kind());
    std::vector<std::uint64_t> counts = density_counts(table, g);
    return Rational(mpz_class(counts[static_cast<std::size_t>(table.classify(h))])) / binomial(n, k);
  }
  const std::string target = canonical_form(h);
  std::uint64_t hits = 0;
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    if (canonical_form(g.induced(s)) == target) ++hits;
  });
  return Rational(mpz_class(hits)) / binomial(n, k);
}

}  // namespace flagcert
