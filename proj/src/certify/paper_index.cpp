#include <algorithm>

#include "flagcert/certify.hpp"

namespace flagcert {

namespace {

// Out-degree 3 somewhere: the three arcs leave a common vertex.
bool is_out_star(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    int out = 0;
    for (int u = 0; u < g.order(); ++u)
      if (u != v && g.has_arc(v, u)) ++out;
    if (out == 3) return true;
  }
  return false;
}

}  // namespace

std::vector<PaperLabel> resolve_paper_indices() {
  const IsoClassTable& t = iso_table(4);
  const std::vector<Rational> lim = limit_densities_Bn(4);
  auto with_density = [&](const Rational& d) {
    std::vector<int> ids;
    for (int i = 0; i < t.size(); ++i)
      if (lim[static_cast<std::size_t>(i)] == d) ids.push_back(i);
    return ids;
  };
  std::vector<PaperLabel> out;
  out.push_back({{1}, with_density(frac(1, 27)), true, "limit density 1/27 in B_n"});

  std::vector<int> stars = with_density(frac(4, 27));
  std::sort(stars.begin(), stars.end(), [&](int a, int b) { return is_out_star(t.graph(a)) > is_out_star(t.graph(b)); });
  std::string star_basis = "limit density 4/27 in B_n; out-star is class ";
  star_basis += stars.empty() ? "?" : std::to_string(stars.front());
  star_basis += ", in-star is class ";
  star_basis += stars.size() < 2 ? "?" : std::to_string(stars.back());
  star_basis += "; which literature index names which star is not recoverable";
  out.push_back({{7, 10}, stars, false, star_basis});

  out.push_back({{27}, with_density(frac(6, 27)), true, "limit density 6/27 in B_n"});
  out.push_back({{32}, with_density(frac(12, 27)), true, "limit density 12/27 in B_n"});

  SharpSet sharp = detect_sharp(4);
  out.push_back({{3, 5, 15, 19, 23, 25}, sharp.eps_linear, false, "sharp classes with zero limit density (matched as a set)"});
  out.push_back({{39, 40, 41, 42}, tournament_classes(4), false, "tournaments (matched as a set)"});
  for (auto& l : out)
    if (l.paper.size() == 1 && l.artifact.size() != 1) l.resolved = false;
  return out;
}

}  // namespace flagcert
