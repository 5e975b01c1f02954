#include <stdexcept>

#include "flagcert/sdp.hpp"

namespace flagcert {

namespace {

double as_double(const Rational& q) { return q.get_d(); }
double as_double(const QuadExt& x) { return x.to_double(); }

}  // namespace

SdpProblem assemble(int k, const FlagFamily& family, const ObjectiveWeights& w) {
  if (family.required_order() > k)
    throw std::invalid_argument("assemble: family needs classes of order " + std::to_string(family.required_order()) +
                                ", got " + std::to_string(k));
  for (const auto& b : family.blocks)
    if (b.type().graph.kind() != family.kind) throw std::invalid_argument("assemble: family kind mismatch");
  const IsoClassTable& t = iso_table(k, family.kind);
  SdpProblem p;
  p.k = k;
  p.kind = family.kind;
  p.weights = w;
  p.shape = family.shape();
  for (const auto& g : t.classes()) {
    p.c.push_back(w.transitive * t_density(g) + w.independent * i_density(g));
    p.A.push_back(flag_matrix(family, g));
  }
  return p;
}

BlockSymMatrix<Rational> combine(const SdpProblem& problem, const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != problem.m()) throw std::invalid_argument("combine: wrong number of weights");
  auto out = BlockSymMatrix<Rational>::zeros(problem.shape);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    for (std::size_t b = 0; b < out.size(); ++b) {
      auto& dst = out.block(b).matrix;
      const auto& src = problem.A[i].block(b).matrix;
      for (int r = 0; r < dst.order(); ++r)
        for (int s = r; s < dst.order(); ++s) dst.at_upper(r, s) += p[i] * src(r, s);
    }
  }
  return out;
}

Rational objective_value(const SdpProblem& problem, const std::vector<Rational>& p) {
  if (static_cast<int>(p.size()) != problem.m()) throw std::invalid_argument("objective_value: wrong number of weights");
  Rational v(0);
  for (std::size_t i = 0; i < p.size(); ++i) v += p[i] * problem.c[i];
  return v;
}

template <class T>
SdpaData to_sdpa(const DensitySdp<T>& problem) {
  SdpaData d;
  const int m = problem.m();
  d.mdim = m;
  for (const auto& [name, n] : problem.shape) d.block_sizes.push_back(n);
  const int lp = static_cast<int>(problem.shape.size()) + 1;
  d.block_sizes.push_back(-(m + 1));
  for (const auto& c : problem.c) d.objective.push_back(c.get_d());
  d.entries.push_back({0, lp, m + 1, m + 1, 1.0});
  for (int i = 0; i < m; ++i) {
    const auto& a = problem.A[static_cast<std::size_t>(i)];
    for (std::size_t b = 0; b < a.size(); ++b) {
      const auto& mat = a.block(b).matrix;
      for (int r = 0; r < mat.order(); ++r)
        for (int s = r; s < mat.order(); ++s)
          if (!is_zero(mat(r, s))) d.entries.push_back({i + 1, static_cast<int>(b) + 1, r + 1, s + 1, as_double(mat(r, s))});
    }
    d.entries.push_back({i + 1, lp, i + 1, i + 1, 1.0});
    d.entries.push_back({i + 1, lp, m + 1, m + 1, 1.0});
  }
  return d;
}

template SdpaData to_sdpa(const DensitySdp<Rational>&);
template SdpaData to_sdpa(const DensitySdp<QuadExt>&);

}  // namespace flagcert
