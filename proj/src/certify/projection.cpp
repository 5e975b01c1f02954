#include <stdexcept>

#include "flagcert/certify.hpp"
#include "flagcert/linalg.hpp"

namespace flagcert {

std::vector<std::pair<std::string, int>> Projection::projected_shape() const {
  std::vector<std::pair<std::string, int>> s;
  for (std::size_t b = 0; b < types.size(); ++b) s.emplace_back(types[b], R[b].cols());
  return s;
}

Projection build_projection(const FlagFamily& family, const std::vector<KernelVector>& kernel) {
  Projection p;
  p.annihilated = kernel;
  for (std::size_t b = 0; b < family.blocks.size(); ++b) {
    const int n = family.blocks[b].size();
    p.types.push_back(family.blocks[b].type().name);

    // orthogonal basis of the kernel span
    std::vector<Vec<Rational>> kbasis;
    std::vector<Rational> knorm;
    auto residual = [&](Vec<Rational> w, const std::vector<Vec<Rational>>& basis, const std::vector<Rational>& norms) {
      for (std::size_t t = 0; t < basis.size(); ++t) {
        Rational coef = dot(w, basis[t]) / norms[t];
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= coef * basis[t][static_cast<std::size_t>(i)];
      }
      return w;
    };
    for (const auto& kv : kernel) {
      if (kv.block != static_cast<int>(b)) continue;
      Vec<Rational> w = residual(kv.vector, kbasis, knorm);
      Rational n2 = dot(w, w);
      if (sgn(n2) == 0) throw std::invalid_argument("build_projection: dependent kernel vectors");
      kbasis.push_back(std::move(w));
      knorm.push_back(n2);
    }
    const std::vector<Vec<Rational>> kernel_only = kbasis;
    const std::vector<Rational> kernel_norms = knorm;

    // e_j minus its projection onto the kernel span, ascending j, skipping dependent ones
    std::vector<Vec<Rational>> complement;
    for (int j = 0; j < n && static_cast<int>(kbasis.size()) < n; ++j) {
      Vec<Rational> e(static_cast<std::size_t>(n), Rational(0));
      e[static_cast<std::size_t>(j)] = 1;
      Vec<Rational> c = residual(e, kernel_only, kernel_norms);
      Vec<Rational> w = residual(c, kbasis, knorm);
      Rational n2 = dot(w, w);
      if (sgn(n2) == 0) continue;
      kbasis.push_back(std::move(w));
      knorm.push_back(n2);
      complement.push_back(std::move(c));
    }

    std::vector<Vec<QuadExt>> cols = orthonormalize(complement, NormPolicy::ScaleToSquarefree);
    Matrix<QuadExt> r(n, static_cast<int>(cols.size()));
    std::vector<Rational> norms;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (int i = 0; i < n; ++i) r(i, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(i)];
      QuadExt n2 = dot(cols[j], cols[j]);
      if (!n2.is_rational()) throw std::logic_error("build_projection: irrational squared norm");
      norms.push_back(n2.a());
    }
    for (const auto& x : norms)
      if (x != 1 && cols.size() > 1)
        throw std::domain_error("build_projection: field overflow in a block with several columns");
    p.R.push_back(std::move(r));
    p.norm2.push_back(std::move(norms));
  }
  return p;
}

BlockSymMatrix<QuadExt> project(const Projection& proj, const BlockSymMatrix<Rational>& a) {
  if (a.size() != proj.R.size()) throw std::invalid_argument("project: block count mismatch");
  std::vector<Block<QuadExt>> out;
  for (std::size_t b = 0; b < a.size(); ++b) {
    const Matrix<QuadExt>& r = proj.R[b];
    const auto& m = a.block(b).matrix;
    if (m.order() != r.rows()) throw std::invalid_argument("project: block order mismatch");
    // T = A R, then Rᵀ T
    Matrix<QuadExt> t(r.rows(), r.cols());
    for (int i = 0; i < r.rows(); ++i)
      for (int k = 0; k < r.rows(); ++k) {
        if (is_zero(m(i, k))) continue;
        for (int j = 0; j < r.cols(); ++j)
          if (!is_zero(r(k, j))) t(i, j) += r(k, j) * m(i, k);
      }
    SymMatrix<QuadExt> bar(r.cols());
    for (int i = 0; i < r.cols(); ++i)
      for (int j = i; j < r.cols(); ++j) {
        QuadExt s;
        for (int k = 0; k < r.rows(); ++k)
          if (!is_zero(r(k, i)) && !is_zero(t(k, j))) s += r(k, i) * t(k, j);
        if (proj.norm2[b][static_cast<std::size_t>(i)] != 1) s *= Rational(1 / proj.norm2[b][static_cast<std::size_t>(i)]);
        bar.set(i, j, std::move(s));
      }
    out.push_back({a.block(b).type, std::move(bar)});
  }
  return BlockSymMatrix<QuadExt>(std::move(out));
}

BlockSymMatrix<QuadExt> pull_back(const Projection& proj, const BlockSymMatrix<QuadExt>& qbar) {
  if (qbar.size() != proj.R.size()) throw std::invalid_argument("pull_back: block count mismatch");
  std::vector<Block<QuadExt>> out;
  for (std::size_t b = 0; b < qbar.size(); ++b) {
    const Matrix<QuadExt>& r = proj.R[b];
    const auto& q = qbar.block(b).matrix;
    if (q.order() != r.cols()) throw std::invalid_argument("pull_back: block order mismatch");
    Matrix<QuadExt> t(r.rows(), r.cols());  // R Q̄
    for (int i = 0; i < r.rows(); ++i)
      for (int k = 0; k < r.cols(); ++k) {
        if (is_zero(r(i, k))) continue;
        QuadExt w = r(i, k);
        if (proj.norm2[b][static_cast<std::size_t>(k)] != 1) w *= Rational(1 / proj.norm2[b][static_cast<std::size_t>(k)]);
        for (int j = 0; j < r.cols(); ++j)
          if (!is_zero(q(k, j))) t(i, j) += w * q(k, j);
      }
    SymMatrix<QuadExt> full(r.rows());
    for (int i = 0; i < r.rows(); ++i)
      for (int j = i; j < r.rows(); ++j) {
        QuadExt s;
        for (int k = 0; k < r.cols(); ++k)
          if (!is_zero(t(i, k)) && !is_zero(r(j, k))) s += t(i, k) * r(j, k);
        full.set(i, j, std::move(s));
      }
    out.push_back({qbar.block(b).type, std::move(full)});
  }
  return BlockSymMatrix<QuadExt>(std::move(out));
}

DensitySdp<QuadExt> project_problem(const SdpProblem& problem, const Projection& proj) {
  DensitySdp<QuadExt> p;
  p.k = problem.k;
  p.kind = problem.kind;
  p.weights = problem.weights;
  p.shape = proj.projected_shape();
  p.c = problem.c;
  p.A.resize(problem.A.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < problem.A.size(); ++i) p.A[i] = project(proj, problem.A[i]);
  return p;
}

}  // namespace flagcert
