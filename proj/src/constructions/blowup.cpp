#include <stdexcept>

#include "flagcert/constructions.hpp"

namespace flagcert {

std::vector<int> blowup_part_sizes(int n) { return {n / 3, (n + 1) / 3, (n + 2) / 3}; }

int blowup_part(int n, int v) {
  if (v < 0 || v >= n) throw std::out_of_range("blowup_part: vertex out of range");
  auto s = blowup_part_sizes(n);
  return v < s[0] ? 0 : v < s[0] + s[1] ? 1 : 2;
}

Graph build_Bn(int n) {
  if (n < 1) throw std::invalid_argument("build_Bn: n must be positive");
  Graph g(n);
  std::vector<int> part(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) part[static_cast<std::size_t>(v)] = blowup_part(n, v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (part[static_cast<std::size_t>(v)] == (part[static_cast<std::size_t>(u)] + 1) % 3) g.add_edge(u, v);
  return g;
}

Rational independent_density_Bn(int n) {
  if (n < 3) return Rational(0);
  Rational s(0);
  for (int size : blowup_part_sizes(n)) s += binomial(size, 3);
  return s / binomial(n, 3);
}

Graph pattern_graph(const std::vector<int>& parts) {
  const int k = static_cast<int>(parts.size());
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (parts[static_cast<std::size_t>(v)] == (parts[static_cast<std::size_t>(u)] + 1) % 3) g.add_edge(u, v);
  return g;
}

std::vector<Rational> limit_densities_Bn(int k) {
  const IsoClassTable& t = iso_table(k);
  std::vector<Rational> out(static_cast<std::size_t>(t.size()), Rational(0));
  int total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  const Rational w(1, total);
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < k; ++i, c /= 3) parts[static_cast<std::size_t>(i)] = c % 3;
    out[static_cast<std::size_t>(t.classify(pattern_graph(parts)))] += w;
  }
  return out;
}

}  // namespace flagcert
