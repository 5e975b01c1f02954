#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagcert/constructions.hpp"
#include "flagcert/sdp.hpp"

namespace flagcert {

enum class Provenance { RoundedFromSolver, PaperData, Handcrafted };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

// An α-certificate candidate: Q ⪰ 0 with ⟨Q, A_i⟩ + α ≤ c_i for every class.
template <class T>
struct Certificate {
  BlockSymMatrix<T> Q;
  Rational alpha{0};
  Provenance provenance = Provenance::Handcrafted;
};

struct VerificationReport {
  bool psd_ok = false;
  bool pd = false;               // every block strictly positive definite
  std::vector<QuadExt> slack;    // s_i = c_i − ⟨Q, A_i⟩ − α
  std::vector<int> equality;     // {i : s_i = 0}
  std::vector<int> kernel_dim;   // per block; only meaningful when psd_ok
  int negative_slacks = 0;

  bool valid() const { return psd_ok && negative_slacks == 0; }
};

// Exact check; throws std::invalid_argument on a shape mismatch.
template <class T>
VerificationReport verify(const Certificate<T>& cert, const SdpProblem& problem);

// Kernel vectors of the main family, as produced by the blowup constructions.
std::vector<KernelVector> derive_kernel_constraints(const FlagFamily& family);

struct SharpSet {
  std::vector<int> all;         // ascending class ids
  std::vector<int> induced;     // positive constant term
  std::vector<int> eps_linear;  // vanishing constant term, positive ε-coefficient
  std::vector<Rational> induced_weights;     // λ_i = limit density
  std::vector<Rational> eps_linear_weights;  // λ_i = ε-coefficient
  std::vector<Rational> induced_eps_weights; // ε-coefficients of the induced classes
};

SharpSet detect_sharp(int k = 4);

// Class ids of the tournaments (no non-adjacent pair) among the k-vertex classes.
std::vector<int> tournament_classes(int k = 4);

struct ConstraintLedger {
  std::vector<std::pair<std::string, int>> shape;
  std::vector<KernelVector> kernel;
  SharpSet sharp;
  Rational alpha;
  std::vector<BlockSymMatrix<Rational>> w_basis;  // W: symmetric matrices annihilating the kernel vectors
  // W̃ = particular + span(w_tilde_directions) inside W
  BlockSymMatrix<Rational> particular;
  std::vector<BlockSymMatrix<Rational>> w_tilde_directions;
  int sharp_rank = 0;

  int dim_w() const { return static_cast<int>(w_basis.size()); }
  int dim_w_tilde() const { return static_cast<int>(w_tilde_directions.size()); }
};

// Throws std::runtime_error if the sharp equations are inconsistent on W.
ConstraintLedger build_ledger(const FlagFamily& family, const std::vector<KernelVector>& kernel, const SharpSet& sharp,
                              const SdpProblem& problem, const Rational& alpha = Rational(1, 9));

// Per block, columns u_j of R spanning the orthogonal complement of the
// kernel vectors, with |u_j|² recorded. Columns are unit vectors when the
// norm lies in Q(√2,√3); a one-column block may keep an unnormalized column,
// and every projected quantity then divides by |u|² exactly, which is the
// same as using u/|u|.
struct Projection {
  std::vector<std::string> types;
  std::vector<Matrix<QuadExt>> R;
  std::vector<std::vector<Rational>> norm2;
  std::vector<KernelVector> annihilated;

  std::vector<std::pair<std::string, int>> projected_shape() const;
};

Projection build_projection(const FlagFamily& family, const std::vector<KernelVector>& kernel);

// Ā = Rᵀ A R and Q = R Q̄ Rᵀ with the orthonormal-column convention above.
BlockSymMatrix<QuadExt> project(const Projection& proj, const BlockSymMatrix<Rational>& a);
BlockSymMatrix<QuadExt> pull_back(const Projection& proj, const BlockSymMatrix<QuadExt>& qbar);
DensitySdp<QuadExt> project_problem(const SdpProblem& problem, const Projection& proj);

struct RoundingOptions {
  std::vector<long> denominators{10000, 100000, 1000000};
};

struct RoundingResult {
  bool ok = false;
  bool pd = false;
  Certificate<QuadExt> certificate;  // over the problem that was rounded
  long denominator = 0;
  std::vector<std::array<int, 3>> solved_entries;  // (block, row, col) fixed by the equations
  std::vector<int> equations;                      // classes held at equality
  std::string diagnostics;
};

// Snap Q̃ entry by entry (lexicographic (block, row, col)) to denominator D,
// deferring any entry whose fixing would leave the equality system
// {c_i − ⟨Q, A_i⟩ = α : i ∈ equations} without a solution; the deferred
// entries are then solved exactly. A result is accepted only if Q is PSD and
// all slacks are non-negative; D escalates through the options.
template <class T>
RoundingResult round_certificate(const BlockSymMatrix<double>& q_float, const DensitySdp<T>& problem,
                                 const std::vector<int>& equations, const Rational& alpha,
                                 const RoundingOptions& opt = {});

// Classes whose float slack is within `threshold`.
std::vector<int> tight_classes(const FloatSolution& sol, double threshold = 1e-5);

struct PipelineOptions {
  int k = 4;
  Kind kind = Kind::Oriented;
  Rational alpha = Rational(1, 9);
  ObjectiveWeights weights;
  SolverOptions solver;
  RoundingOptions rounding;
  std::optional<std::string> solution_text;  // imported solver output for the (projected) problem
  std::optional<std::string> sdpa_out;       // write the (projected) problem here
};

struct StageLog {
  std::string stage;
  bool ok = true;
  std::string detail;
  double seconds = 0;
};

struct PipelineResult {
  bool ok = false;
  std::string failed_stage;
  std::vector<StageLog> log;
  Certificate<QuadExt> certificate;  // for the unprojected problem
  VerificationReport report;
  FloatSolution float_solution;
  std::optional<Certificate<QuadExt>> projected;
  std::optional<ConstraintLedger> ledger;
  std::optional<SharpSet> sharp;
  std::vector<int> tournaments;
};

// k = 4: assemble → solve → kernel → sharp → ledger → projection → rounding
// → pull-back → verify. k = 3: assemble → solve → direct rounding → verify.
PipelineResult full_pipeline(const PipelineOptions& opt = {});

// The problem a pipeline run certifies.
SdpProblem pipeline_problem(const PipelineOptions& opt);

struct PaperLabel {
  std::vector<int> paper;     // indices as numbered in the literature
  std::vector<int> artifact;  // class ids of iso_table(4)
  bool resolved = false;      // a single literature index pinned to a single class
  std::string basis;
};

std::vector<PaperLabel> resolve_paper_indices();

// Certificate JSON: {alpha, k, kind, weights, provenance, blocks:[{type, order,
// scalar_ring, entries}], report}.
nlohmann::json certificate_to_json(const Certificate<QuadExt>& cert, const SdpProblem& problem,
                                   const VerificationReport* report = nullptr);
// Throws std::runtime_error on malformed input or a ring mismatch.
Certificate<QuadExt> certificate_from_json(const nlohmann::json& j);
// Problem named in a certificate file (k, kind, weights).
SdpProblem problem_from_certificate_json(const nlohmann::json& j);
nlohmann::json report_to_json(const VerificationReport& r);

// The projected certificate printed in the literature for the main problem,
// with blocks (1, 6, 8) over Q(√2,√3).
BlockSymMatrix<QuadExt> paper_qbar();

// Flag matrices with each σ-block divided by the fraction of injective maps
// that are rootings (the per-rooting average normalization).
SdpProblem rooting_normalized(const SdpProblem& problem);

struct PaperQbarReport {
  bool pd = false;
  std::size_t permutations_tried = 0;
  std::size_t candidates = 0;  // permutation pairs passing the float sharp-equation filter
  bool verified = false;       // some candidate passed exact verification
  std::vector<int> perm_nonedge, perm_edge;
  VerificationReport identity_report;  // identity permutation, rooting-normalized matrices
  std::string summary;
};

// Exploratory: conjugate the literature Q̄ by within-block permutations and
// test it against this artifact's projection.
PaperQbarReport explore_paper_qbar(const Projection& proj, const SdpProblem& problem);

}  // namespace flagcert
