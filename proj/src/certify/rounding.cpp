#include <algorithm>
#include <cmath>
#include <sstream>

#include "flagcert/certify.hpp"
#include "flagcert/linalg.hpp"

namespace flagcert {

namespace {

struct Var {
  int block, row, col;
};

Rational snap(double x, long den) {
  Rational q(static_cast<long>(std::llround(x * static_cast<double>(den))), den);
  q.canonicalize();
  return q;
}

QuadExt as_quad(const Rational& x) { return QuadExt(x); }
QuadExt as_quad(const QuadExt& x) { return x; }

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::vector<int> tight_classes(const FloatSolution& sol, double threshold) {
  std::vector<int> out;
  for (std::size_t i = 0; i < sol.slack.size(); ++i)
    if (sol.slack[i] <= threshold) out.push_back(static_cast<int>(i));
  return out;
}

template <class T>
RoundingResult round_certificate(const BlockSymMatrix<double>& q_float, const DensitySdp<T>& problem,
                                 const std::vector<int>& equations, const Rational& alpha, const RoundingOptions& opt) {
  if (q_float.shape() != problem.shape) throw std::invalid_argument("round_certificate: shape mismatch");
  RoundingResult res;
  res.equations = equations;

  std::vector<Var> vars;
  for (std::size_t b = 0; b < problem.shape.size(); ++b)
    for (int r = 0; r < problem.shape[b].second; ++r)
      for (int s = r; s < problem.shape[b].second; ++s) vars.push_back({static_cast<int>(b), r, s});
  const int nv = static_cast<int>(vars.size());
  const int ne = static_cast<int>(equations.size());

  Matrix<T> eq(ne, nv);
  Vec<T> rhs;
  for (int e = 0; e < ne; ++e) {
    const auto i = static_cast<std::size_t>(equations[static_cast<std::size_t>(e)]);
    const auto& a = problem.A[i];
    for (int j = 0; j < nv; ++j) {
      const Var& v = vars[static_cast<std::size_t>(j)];
      T x = a.block(static_cast<std::size_t>(v.block)).matrix(v.row, v.col);
      eq(e, j) = v.row == v.col ? x : T(x + x);
    }
    rhs.push_back(T(Rational(problem.c[i] - alpha)));
  }

  // Fixing entries greedily in order while the rest still spans the column
  // space leaves exactly the lexicographically last column basis unfixed,
  // which is what a pivot scan from the last column finds.
  std::vector<int> deferred;
  {
    Matrix<T> rev(ne, nv);
    for (int e = 0; e < ne; ++e)
      for (int j = 0; j < nv; ++j) rev(e, j) = eq(e, nv - 1 - j);
    for (int c : rref(rev).pivot_cols) deferred.push_back(nv - 1 - c);
    std::sort(deferred.begin(), deferred.end());
  }
  std::vector<bool> is_deferred(static_cast<std::size_t>(nv), false);
  for (int j : deferred) is_deferred[static_cast<std::size_t>(j)] = true;
  for (int j : deferred) {
    const Var& v = vars[static_cast<std::size_t>(j)];
    res.solved_entries.push_back({v.block, v.row, v.col});
  }

  std::ostringstream diag;
  for (long den : opt.denominators) {
    Vec<T> values(static_cast<std::size_t>(nv), T(0));
    Vec<T> b = rhs;
    for (int j = 0; j < nv; ++j) {
      if (is_deferred[static_cast<std::size_t>(j)]) continue;
      const Var& v = vars[static_cast<std::size_t>(j)];
      values[static_cast<std::size_t>(j)] = T(snap(q_float.block(static_cast<std::size_t>(v.block)).matrix(v.row, v.col), den));
      for (int e = 0; e < ne; ++e)
        if (!is_zero(eq(e, j))) b[static_cast<std::size_t>(e)] -= eq(e, j) * values[static_cast<std::size_t>(j)];
    }
    if (!deferred.empty() || ne > 0) {
      Matrix<T> sub(ne, static_cast<int>(deferred.size()));
      for (int e = 0; e < ne; ++e)
        for (std::size_t k = 0; k < deferred.size(); ++k) sub(e, static_cast<int>(k)) = eq(e, deferred[k]);
      LinearSolution<T> sol = solve_linear(sub, b);
      if (sol.status != LinearSolution<T>::Status::Unique) {
        std::vector<int> failing;
        for (std::size_t e = 0; e < sol.inconsistency.size(); ++e)
          if (!is_zero(sol.inconsistency[e])) failing.push_back(equations[e]);
        diag << "D=" << den << ": equality system inconsistent on classes {" << join(failing) << "}; ";
        continue;
      }
      for (std::size_t k = 0; k < deferred.size(); ++k) values[static_cast<std::size_t>(deferred[k])] = sol.particular[k];
    }

    auto q = BlockSymMatrix<QuadExt>::zeros(problem.shape);
    for (int j = 0; j < nv; ++j) {
      const Var& v = vars[static_cast<std::size_t>(j)];
      q.block(static_cast<std::size_t>(v.block)).matrix.set(v.row, v.col, as_quad(values[static_cast<std::size_t>(j)]));
    }
    std::vector<int> not_psd;
    bool pd = true;
    for (std::size_t bl = 0; bl < q.size(); ++bl) {
      LdltResult<QuadExt> l = ldlt_psd(q.block(bl).matrix);
      if (!l.psd) not_psd.push_back(static_cast<int>(bl));
      pd = pd && l.psd && l.rank == q.block(bl).matrix.order();
    }
    std::vector<int> negative;
    for (int i = 0; i < problem.m(); ++i) {
      QuadExt s = QuadExt(Rational(problem.c[static_cast<std::size_t>(i)] - alpha)) -
                  frobenius<QuadExt>(q, problem.A[static_cast<std::size_t>(i)]);
      if (sign_of(s) < 0) negative.push_back(i);
    }
    if (!not_psd.empty() || !negative.empty()) {
      diag << "D=" << den << ":";
      if (!not_psd.empty()) diag << " blocks {" << join(not_psd) << "} not PSD";
      if (!negative.empty()) diag << " negative slack on classes {" << join(negative) << "}";
      diag << "; ";
      continue;
    }
    res.ok = true;
    res.pd = pd;
    res.denominator = den;
    res.certificate = {std::move(q), alpha, Provenance::RoundedFromSolver};
    diag << "D=" << den << ": ok";
    break;
  }
  res.diagnostics = diag.str();
  return res;
}

template RoundingResult round_certificate(const BlockSymMatrix<double>&, const DensitySdp<Rational>&,
                                          const std::vector<int>&, const Rational&, const RoundingOptions&);
template RoundingResult round_certificate(const BlockSymMatrix<double>&, const DensitySdp<QuadExt>&,
                                          const std::vector<int>&, const Rational&, const RoundingOptions&);

}  // namespace flagcert
