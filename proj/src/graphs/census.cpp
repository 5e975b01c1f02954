#include <algorithm>
#include <stdexcept>

#include "flagcert/graph.hpp"

namespace flagcert {

namespace {

enum class TripleKind { Independent, Transitive, Cyclic, Mixed };

TripleKind classify_triple(const Graph& g, int a, int b, int c) {
  const Arc ab = g.arc(a, b), bc = g.arc(b, c), ca = g.arc(c, a);
  const int edges = (ab != Arc::None) + (bc != Arc::None) + (ca != Arc::None);
  if (edges == 0) return TripleKind::Independent;
  if (edges < 3) return TripleKind::Mixed;
  if (g.kind() == Kind::Undirected) return TripleKind::Transitive;
  if (ab == bc && bc == ca) return TripleKind::Cyclic;
  return TripleKind::Transitive;
}

}  // namespace

TripleCensus triple_census(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("triple_census: need at least 3 vertices");
  TripleCensus c;
  c.transitive_at.assign(static_cast<std::size_t>(n), 0);
  c.independent_at.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) {
        switch (classify_triple(g, a, b, d)) {
          case TripleKind::Independent:
            ++c.independent;
            for (int v : {a, b, d}) ++c.independent_at[static_cast<std::size_t>(v)];
            break;
          case TripleKind::Transitive:
            ++c.transitive;
            for (int v : {a, b, d}) ++c.transitive_at[static_cast<std::size_t>(v)];
            break;
          case TripleKind::Cyclic: ++c.cyclic; break;
          case TripleKind::Mixed: ++c.mixed; break;
        }
      }
  return c;
}

std::pair<std::uint64_t, std::uint64_t> triples_containing(const Graph& g, const std::vector<int>& s) {
  std::uint64_t t = 0, i = 0;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) {
        bool contains = std::all_of(s.begin(), s.end(), [&](int v) { return v == a || v == b || v == d; });
        if (!contains) continue;
        TripleKind k = classify_triple(g, a, b, d);
        if (k == TripleKind::Transitive) ++t;
        if (k == TripleKind::Independent) ++i;
      }
  return {t, i};
}

Rational t_density(const Graph& g) {
  return Rational(mpz_class(triple_census(g).transitive)) / binomial(g.order(), 3);
}
Rational i_density(const Graph& g) {
  return Rational(mpz_class(triple_census(g).independent)) / binomial(g.order(), 3);
}
Rational c_density(const Graph& g) {
  return Rational(mpz_class(triple_census(g).cyclic)) / binomial(g.order(), 3);
}

std::vector<Degrees> degree_profile(const Graph& g) {
  std::vector<Degrees> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto& d = out[static_cast<std::size_t>(v)];
    for (int u = 0; u < g.order(); ++u) {
      if (u == v) continue;
      switch (g.arc(v, u)) {
        case Arc::Out:
        case Arc::Both: ++d.out; break;
        case Arc::In: ++d.in; break;
        case Arc::None: ++d.none; break;
      }
    }
  }
  return out;
}

}  // namespace flagcert
