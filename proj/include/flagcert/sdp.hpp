#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagcert/flags.hpp"
#include "flagcert/matrix.hpp"

namespace flagcert {

// c_i = t_weight·t(G_i) + i_weight·i(G_i)
struct ObjectiveWeights {
  Rational transitive{1};
  Rational independent{1};
};

// Density SDP over the k-vertex classes G_1..G_m:
//   minimize Σ p_i c_i  s.t.  p ≥ 0, Σ p_i = 1, Σ p_i A_i ⪰ 0,
// and its certificate form
//   maximize α  s.t.  Q ⪰ 0, ⟨Q, A_i⟩ + α ≤ c_i.
template <class T>
struct DensitySdp {
  int k = 0;
  Kind kind = Kind::Oriented;
  ObjectiveWeights weights;
  std::vector<std::pair<std::string, int>> shape;
  std::vector<Rational> c;
  std::vector<BlockSymMatrix<T>> A;

  int m() const { return static_cast<int>(c.size()); }
};

using SdpProblem = DensitySdp<Rational>;

SdpProblem assemble(int k, const FlagFamily& family, const ObjectiveWeights& w = {});

// Σ p_i A_i and Σ p_i c_i for a class distribution p.
BlockSymMatrix<Rational> combine(const SdpProblem& problem, const std::vector<Rational>& p);
Rational objective_value(const SdpProblem& problem, const std::vector<Rational>& p);

// SDPA sparse data. Matrix 0 is the objective matrix F_0; negative block
// sizes denote diagonal blocks. Indices are 1-based as in the file.
struct SdpaData {
  struct Entry {
    int mat, block, i, j;
    double value;
  };
  int mdim = 0;
  std::vector<int> block_sizes;
  std::vector<double> objective;
  std::vector<Entry> entries;
};

// Layout: y = p (mDIM = m); blocks = the family blocks followed by a
// diagonal block of size m+1 holding the slacks s_i and α. F_0 selects α,
// F_i = diag(A_i, e_i, 1), objective row = c.
template <class T>
SdpaData to_sdpa(const DensitySdp<T>& problem);

std::string write_sdpa(const SdpaData& data);
SdpaData read_sdpa(std::string_view text);  // throws std::runtime_error

struct FloatSolution {
  BlockSymMatrix<double> Q;
  double alpha = 0;
  std::vector<double> p;      // dual multipliers: a class distribution
  std::vector<double> slack;  // c_i − ⟨Q, A_i⟩ − α
  int iterations = 0;
  double gap = 0;             // relative duality gap
  double primal_infeasibility = 0;
  double dual_infeasibility = 0;
  bool converged = false;
  std::string status;
};

// c_i − ⟨Q, F_i⟩ − α over the family blocks of an SDPA layout from to_sdpa.
std::vector<double> certificate_slacks(const SdpaData& data, const BlockSymMatrix<double>& q, double alpha);

// Solution text in the CSDP layout: the y vector on one line, then
// "1 blk i j v" entries of Z and "2 blk i j v" entries of X.
std::string write_solution(const FloatSolution& sol, const SdpaData& data);
FloatSolution read_solution(std::string_view text, const SdpaData& data,
                            const std::vector<std::pair<std::string, int>>& shape);

struct SolverOptions {
  double tol = 1e-8;
  int max_iters = 100;
  bool verbose = false;
};

// Primal-dual interior point (HKM direction, Mehrotra predictor-corrector).
FloatSolution solve_sdpa(const SdpaData& data, const std::vector<std::pair<std::string, int>>& shape,
                         const SolverOptions& opt = {});

template <class T>
FloatSolution solve_embedded(const DensitySdp<T>& problem, const SolverOptions& opt = {}) {
  return solve_sdpa(to_sdpa(problem), problem.shape, opt);
}

}  // namespace flagcert
