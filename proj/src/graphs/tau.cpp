#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

#include "flagcert/graph.hpp"

namespace flagcert {

namespace {

struct TripleIndex {
  int ab, ac, bc;  // pair positions of a<b<c
};

struct Layout {
  int n = 0, pairs = 0;
  std::vector<std::array<int, 2>> pair_vertices;
  std::vector<TripleIndex> triples;
  std::uint64_t total = 1;  // 3^pairs
};

Layout make_layout(int n) {
  if (n < 3 || n > 6) throw std::invalid_argument("brute_force_tau: n must be in 3..6");
  Layout l;
  l.n = n;
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l.pairs++;
      l.pair_vertices.push_back({i, j});
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        l.triples.push_back({pos[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                             pos[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)],
                             pos[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]});
  for (int p = 0; p < l.pairs; ++p) l.total *= 3;
  return l;
}

// Digits in {0 none, 1 i→j, 2 j→i} for pair (i<j).
int transitive_plus_independent(const Layout& l, const std::uint8_t* d) {
  int count = 0;
  for (const auto& t : l.triples) {
    const int ab = d[t.ab], ac = d[t.ac], bc = d[t.bc];
    if (ab == 0 && ac == 0 && bc == 0) {
      ++count;
    } else if (ab && ac && bc) {
      // a→b→c→a or its reverse
      const bool cyclic = (ab == 1 && bc == 1 && ac == 2) || (ab == 2 && bc == 2 && ac == 1);
      if (!cyclic) ++count;
    }
  }
  return count;
}

void digits_of(std::uint64_t code, int pairs, std::uint8_t* d) {
  for (int p = 0; p < pairs; ++p) {
    d[p] = static_cast<std::uint8_t>(code % 3);
    code /= 3;
  }
}

Graph graph_of(const Layout& l, std::uint64_t code) {
  std::array<std::uint8_t, 15> d{};
  digits_of(code, l.pairs, d.data());
  Graph g(l.n);
  for (int p = 0; p < l.pairs; ++p)
    g.set_arc(l.pair_vertices[static_cast<std::size_t>(p)][0], l.pair_vertices[static_cast<std::size_t>(p)][1],
              static_cast<Arc>(d[static_cast<std::size_t>(p)]));
  return g;
}

TauResult finish(const Layout& l, int best, std::uint64_t code) {
  return {Rational(best) / binomial(l.n, 3), graph_of(l, code)};
}

}  // namespace

TauResult brute_force_tau_serial(int n) {
  const Layout l = make_layout(n);
  int best = std::numeric_limits<int>::max();
  std::uint64_t best_code = 0;
  std::array<std::uint8_t, 15> d{};
  for (std::uint64_t code = 0; code < l.total; ++code) {
    digits_of(code, l.pairs, d.data());
    int v = transitive_plus_independent(l, d.data());
    if (v < best) {
      best = v;
      best_code = code;
    }
  }
  return finish(l, best, best_code);
}

TauResult brute_force_tau(int n) {
  const Layout l = make_layout(n);
  int best = std::numeric_limits<int>::max();
  std::uint64_t best_code = 0;
  const auto total = static_cast<std::int64_t>(l.total);
#pragma omp parallel
  {
    int local_best = std::numeric_limits<int>::max();
    std::uint64_t local_code = 0;
    std::array<std::uint8_t, 15> d{};
#pragma omp for schedule(static)
    for (std::int64_t code = 0; code < total; ++code) {
      digits_of(static_cast<std::uint64_t>(code), l.pairs, d.data());
      int v = transitive_plus_independent(l, d.data());
      if (v < local_best) {
        local_best = v;
        local_code = static_cast<std::uint64_t>(code);
      }
    }
    // smallest code among minimizers, independent of the thread split
#pragma omp critical
    if (local_best < best || (local_best == best && local_code < best_code)) {
      best = local_best;
      best_code = local_code;
    }
  }
  return finish(l, best, best_code);
}

}  // namespace flagcert
