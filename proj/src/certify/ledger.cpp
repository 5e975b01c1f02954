#include <stdexcept>

#include "flagcert/certify.hpp"
#include "flagcert/linalg.hpp"

namespace flagcert {

namespace {

// Symmetric n×n matrices M with M v = 0 for every v, as upper-triangle vectors.
std::vector<SymMatrix<Rational>> annihilator_basis(int n, const std::vector<Vec<Rational>>& vs) {
  std::vector<std::pair<int, int>> vars;
  for (int r = 0; r < n; ++r)
    for (int s = r; s < n; ++s) vars.emplace_back(r, s);
  const int nv = static_cast<int>(vars.size());
  Matrix<Rational> eq(std::max(1, static_cast<int>(vs.size()) * n), nv);
  int row = 0;
  for (const auto& v : vs)
    for (int r = 0; r < n; ++r, ++row)
      for (int j = 0; j < nv; ++j) {
        auto [a, b] = vars[static_cast<std::size_t>(j)];
        if (a == r) eq(row, j) += v[static_cast<std::size_t>(b)];
        if (b == r && a != b) eq(row, j) += v[static_cast<std::size_t>(a)];
      }
  std::vector<SymMatrix<Rational>> out;
  for (const auto& x : kernel_basis(eq)) {
    SymMatrix<Rational> m(n);
    for (int j = 0; j < nv; ++j) m.set(vars[static_cast<std::size_t>(j)].first, vars[static_cast<std::size_t>(j)].second, x[static_cast<std::size_t>(j)]);
    out.push_back(std::move(m));
  }
  return out;
}

BlockSymMatrix<Rational> combination(const std::vector<BlockSymMatrix<Rational>>& basis, const Vec<Rational>& x,
                                     const std::vector<std::pair<std::string, int>>& shape) {
  auto out = BlockSymMatrix<Rational>::zeros(shape);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t b = 0; b < out.size(); ++b) {
      auto& dst = out.block(b).matrix;
      const auto& src = basis[j].block(b).matrix;
      for (int r = 0; r < dst.order(); ++r)
        for (int s = r; s < dst.order(); ++s) dst.at_upper(r, s) += x[j] * src(r, s);
    }
  }
  return out;
}

}  // namespace

ConstraintLedger build_ledger(const FlagFamily& family, const std::vector<KernelVector>& kernel, const SharpSet& sharp,
                              const SdpProblem& problem, const Rational& alpha) {
  if (problem.shape != family.shape()) throw std::invalid_argument("build_ledger: problem and family differ");
  ConstraintLedger l;
  l.shape = family.shape();
  l.kernel = kernel;
  l.sharp = sharp;
  l.alpha = alpha;

  for (std::size_t b = 0; b < l.shape.size(); ++b) {
    std::vector<Vec<Rational>> vs;
    for (const auto& kv : kernel)
      if (kv.block == static_cast<int>(b)) vs.push_back(kv.vector);
    for (auto& m : annihilator_basis(l.shape[b].second, vs)) {
      auto full = BlockSymMatrix<Rational>::zeros(l.shape);
      full.block(b).matrix = std::move(m);
      l.w_basis.push_back(std::move(full));
    }
  }

  // sharp equations in W-coordinates: Σ_j x_j ⟨A_i, B_j⟩ = c_i − α
  const int n = l.dim_w();
  Matrix<Rational> eq(static_cast<int>(sharp.all.size()), n);
  Vec<Rational> rhs;
  for (std::size_t r = 0; r < sharp.all.size(); ++r) {
    const auto i = static_cast<std::size_t>(sharp.all[r]);
    if (sharp.all[r] < 0 || sharp.all[r] >= problem.m()) throw std::invalid_argument("build_ledger: sharp id out of range");
    for (int j = 0; j < n; ++j)
      eq(static_cast<int>(r), j) = frobenius<Rational>(problem.A[i], l.w_basis[static_cast<std::size_t>(j)]);
    rhs.push_back(problem.c[i] - alpha);
  }
  LinearSolution<Rational> sol = solve_linear(eq, rhs);
  if (sol.status == LinearSolution<Rational>::Status::Inconsistent)
    throw std::runtime_error("build_ledger: the sharp equations are inconsistent on W");
  l.sharp_rank = static_cast<int>(sol.pivot_vars.size());
  l.particular = combination(l.w_basis, sol.particular, l.shape);
  for (const auto& d : sol.nullspace) l.w_tilde_directions.push_back(combination(l.w_basis, d, l.shape));
  return l;
}

}  // namespace flagcert
