#include <stdexcept>

#include "flagcert/certify.hpp"

namespace flagcert {

std::vector<KernelVector> derive_kernel_constraints(const FlagFamily& family) {
  if (family.kind != Kind::Oriented || family.shape() != main_family().shape())
    throw std::invalid_argument("derive_kernel_constraints: expects the main family");
  return limit_rooted_vectors(family);
}

SharpSet detect_sharp(int k) {
  const std::vector<EpsPolynomial> e = expected_densities_Bn_eps(k);
  SharpSet s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Rational c0 = e[i].coeff(0), c1 = e[i].coeff(1);
    if (sgn(c0) > 0) {
      s.induced.push_back(static_cast<int>(i));
      s.induced_weights.push_back(c0);
      s.induced_eps_weights.push_back(c1);
    } else if (sgn(c1) > 0) {
      s.eps_linear.push_back(static_cast<int>(i));
      s.eps_linear_weights.push_back(c1);
    } else {
      continue;
    }
    s.all.push_back(static_cast<int>(i));
  }
  return s;
}

std::vector<int> tournament_classes(int k) {
  const IsoClassTable& t = iso_table(k);
  std::vector<int> out;
  for (int id = 0; id < t.size(); ++id) {
    const Graph& g = t.graph(id);
    bool complete = true;
    for (int u = 0; u < k && complete; ++u)
      for (int v = u + 1; v < k && complete; ++v) complete = g.adjacent(u, v);
    if (complete) out.push_back(id);
  }
  return out;
}

}  // namespace flagcert
