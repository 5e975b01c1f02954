#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "flagcert/sdp.hpp"

namespace flagcert {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Blocks = std::vector<MatrixXd>;

// Convention: maximize ⟨C,X⟩ s.t. ⟨A_i,X⟩ = a_i, X ⪰ 0;
// minimize aᵀy s.t. Z = Σ y_i A_i − C ⪰ 0.
struct Dense {
  std::vector<int> sizes;
  Blocks C;
  std::vector<Blocks> A;
  VectorXd a;
  int order = 0;
};

Blocks zeros(const std::vector<int>& sizes) {
  Blocks b;
  for (int s : sizes) b.push_back(MatrixXd::Zero(s, s));
  return b;
}

Blocks identity(const std::vector<int>& sizes, double v) {
  Blocks b;
  for (int s : sizes) b.push_back(v * MatrixXd::Identity(s, s));
  return b;
}

double inner(const Blocks& x, const Blocks& y) {
  double s = 0;
  for (std::size_t b = 0; b < x.size(); ++b) s += x[b].cwiseProduct(y[b]).sum();
  return s;
}

double norm(const Blocks& x) { return std::sqrt(inner(x, x)); }

void axpy(double s, const Blocks& x, Blocks& y) {
  for (std::size_t b = 0; b < x.size(); ++b) y[b] += s * x[b];
}

Dense densify(const SdpaData& d) {
  Dense p;
  for (int s : d.block_sizes) p.sizes.push_back(std::abs(s));
  for (int s : p.sizes) p.order += s;
  p.C = zeros(p.sizes);
  p.A.assign(static_cast<std::size_t>(d.mdim), zeros(p.sizes));
  p.a = VectorXd::Map(d.objective.data(), d.mdim);
  for (const auto& e : d.entries) {
    Blocks& tgt = e.mat == 0 ? p.C : p.A[static_cast<std::size_t>(e.mat - 1)];
    MatrixXd& m = tgt[static_cast<std::size_t>(e.block - 1)];
    m(e.i - 1, e.j - 1) = e.value;
    m(e.j - 1, e.i - 1) = e.value;
  }
  return p;
}

VectorXd apply_A(const Dense& p, const Blocks& x) {
  VectorXd r(p.A.size());
  for (std::size_t i = 0; i < p.A.size(); ++i) r(static_cast<Eigen::Index>(i)) = inner(p.A[i], x);
  return r;
}

Blocks apply_At(const Dense& p, const VectorXd& y) {
  Blocks out = zeros(p.sizes);
  for (std::size_t i = 0; i < p.A.size(); ++i) axpy(y(static_cast<Eigen::Index>(i)), p.A[i], out);
  return out;
}

// sym(X·W·Zinv)
Blocks sym_product(const Blocks& x, const Blocks& w, const Blocks& zinv) {
  Blocks out(x.size());
  for (std::size_t b = 0; b < x.size(); ++b) {
    MatrixXd t = x[b] * w[b] * zinv[b];
    out[b] = 0.5 * (t + t.transpose());
  }
  return out;
}

bool cholesky_ok(const Blocks& x) {
  for (const auto& m : x) {
    if (m.rows() == 0) continue;
    Eigen::LLT<MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) return false;
  }
  return true;
}

// Largest t with x + t·dx ⪰ 0 (x ≻ 0), or +inf.
double max_step(const Blocks& x, const Blocks& dx) {
  double t = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].rows() == 0) continue;
    Eigen::LLT<MatrixXd> llt(x[b]);
    MatrixXd l = llt.matrixL();
    MatrixXd li = l.triangularView<Eigen::Lower>().solve(MatrixXd::Identity(l.rows(), l.cols()));
    MatrixXd s = li * dx[b] * li.transpose();
    double lmin = Eigen::SelfAdjointEigenSolver<MatrixXd>(0.5 * (s + s.transpose()), Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (lmin < 0) t = std::min(t, -1.0 / lmin);
  }
  return t;
}

Blocks inverse(const Blocks& z) {
  Blocks out(z.size());
  for (std::size_t b = 0; b < z.size(); ++b) {
    if (z[b].rows() == 0) {
      out[b] = z[b];
      continue;
    }
    out[b] = Eigen::LLT<MatrixXd>(z[b]).solve(MatrixXd::Identity(z[b].rows(), z[b].cols()));
  }
  return out;
}

}  // namespace

FloatSolution solve_sdpa(const SdpaData& data, const std::vector<std::pair<std::string, int>>& shape,
                         const SolverOptions& opt) {
  const Dense p = densify(data);
  const int m = data.mdim;
  const double n = p.order;

  // starting point
  double anorm_max = 0, ratio = 0;
  for (int i = 0; i < m; ++i) {
    double an = norm(p.A[static_cast<std::size_t>(i)]);
    anorm_max = std::max(anorm_max, an);
    ratio = std::max(ratio, (1 + std::abs(p.a(i))) / (1 + an));
  }
  const double cnorm = norm(p.C);
  Blocks X = identity(p.sizes, 10 * n * ratio);
  Blocks Z = identity(p.sizes, 10 * (1 + std::max(anorm_max, cnorm)) / std::sqrt(n));
  VectorXd y = VectorXd::Zero(m);

  FloatSolution sol;
  const double anorm = p.a.norm();
  for (int it = 0; it <= opt.max_iters; ++it) {
    const VectorXd rp = p.a - apply_A(p, X);
    Blocks rd = apply_At(p, y);
    axpy(-1.0, p.C, rd);
    axpy(-1.0, Z, rd);
    const double pobj = inner(p.C, X), dobj = p.a.dot(y);
    sol.gap = std::abs(dobj - pobj) / (1 + std::abs(pobj) + std::abs(dobj));
    sol.primal_infeasibility = rp.norm() / (1 + anorm);
    sol.dual_infeasibility = norm(rd) / (1 + cnorm);
    sol.iterations = it;
    if (opt.verbose)
      std::fprintf(stderr, "iter %3d  pobj %.12e  dobj %.12e  gap %.2e  pinf %.2e  dinf %.2e\n", it, pobj, dobj, sol.gap,
                   sol.primal_infeasibility, sol.dual_infeasibility);
    if (sol.gap <= opt.tol && sol.primal_infeasibility <= opt.tol && sol.dual_infeasibility <= opt.tol) {
      sol.converged = true;
      break;
    }
    if (it == opt.max_iters) break;

    const double mu = inner(X, Z) / n;
    const Blocks zinv = inverse(Z);

    // Schur complement M_ij = ⟨A_i, X A_j Z⁻¹⟩
    MatrixXd M(m, m);
    for (int j = 0; j < m; ++j) {
      Blocks g(p.sizes.size());
      for (std::size_t b = 0; b < g.size(); ++b) g[b] = X[b] * p.A[static_cast<std::size_t>(j)][b] * zinv[b];
      for (int i = 0; i <= j; ++i) M(i, j) = M(j, i) = inner(p.A[static_cast<std::size_t>(i)], g);
    }
    Eigen::LDLT<MatrixXd> schur(M);
    if (schur.info() != Eigen::Success) {
      sol.status = "schur complement factorization failed";
      break;
    }
    const Blocks x_rd_z = sym_product(X, rd, zinv);

    auto direction = [&](const Blocks& rc, Blocks& dx, VectorXd& dy, Blocks& dz) {
      Blocks t = rc;
      axpy(-1.0, x_rd_z, t);
      dy = schur.solve(apply_A(p, t) - rp);
      dz = apply_At(p, dy);
      axpy(1.0, rd, dz);
      dx = rc;
      axpy(-1.0, sym_product(X, dz, zinv), dx);
    };

    // predictor
    Blocks rc = X;
    for (auto& b : rc) b = -b;
    Blocks dxa, dza;
    VectorXd dya;
    direction(rc, dxa, dya, dza);
    const double ap = std::min(1.0, max_step(X, dxa)), ad = std::min(1.0, max_step(Z, dza));
    Blocks xa = X, za = Z;
    axpy(ap, dxa, xa);
    axpy(ad, dza, za);
    const double mu_aff = inner(xa, za) / n;
    const double sigma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);

    // corrector
    rc = zinv;
    for (auto& b : rc) b *= sigma * mu;
    axpy(-1.0, X, rc);
    axpy(-1.0, sym_product(dxa, dza, zinv), rc);
    Blocks dx, dz;
    VectorXd dy;
    direction(rc, dx, dy, dz);
    const double sp = std::min(1.0, 0.95 * max_step(X, dx)), sd = std::min(1.0, 0.95 * max_step(Z, dz));
    axpy(sp, dx, X);
    axpy(sd, dz, Z);
    y += sd * dy;
    for (auto* blocks : {&X, &Z})
      for (auto& b : *blocks) b = 0.5 * (b + b.transpose());
  }

  // least-squares primal correction, kept only if X stays positive definite
  {
    const VectorXd rp = p.a - apply_A(p, X);
    MatrixXd gram(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j)
        gram(i, j) = gram(j, i) = inner(p.A[static_cast<std::size_t>(i)], p.A[static_cast<std::size_t>(j)]);
    Blocks fixed = X;
    axpy(1.0, apply_At(p, gram.ldlt().solve(rp)), fixed);
    if (cholesky_ok(fixed)) X = fixed;
    sol.primal_infeasibility = (p.a - apply_A(p, X)).norm() / (1 + anorm);
  }

  sol.Q = BlockSymMatrix<double>::zeros(shape);
  for (std::size_t b = 0; b < shape.size(); ++b) {
    auto& q = sol.Q.block(b).matrix;
    for (int i = 0; i < q.order(); ++i)
      for (int j = i; j < q.order(); ++j) q.set(i, j, X[b](i, j));
  }
  sol.alpha = X.back()(m, m);
  sol.p.assign(y.data(), y.data() + m);
  sol.slack = certificate_slacks(data, sol.Q, sol.alpha);
  if (sol.status.empty()) sol.status = sol.converged ? "converged" : "max iterations reached";
  return sol;
}

}  // namespace flagcert
