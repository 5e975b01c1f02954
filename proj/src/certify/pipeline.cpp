#include <chrono>
#include <fstream>
#include <sstream>

#include "flagcert/certify.hpp"

namespace flagcert {

namespace {

using Clock = std::chrono::steady_clock;

class Stages {
 public:
  explicit Stages(PipelineResult& r) : r_(r) {}

  // Runs f; returns false (and records the failure) on an exception or when
  // f returns a non-empty error string.
  template <class F>
  bool run(const std::string& name, F&& f) {
    auto t0 = Clock::now();
    StageLog log{name, true, "", 0};
    try {
      std::string err = f(log.detail);
      if (!err.empty()) {
        log.ok = false;
        log.detail = err;
      }
    } catch (const std::exception& e) {
      log.ok = false;
      log.detail = e.what();
    }
    log.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r_.log.push_back(log);
    if (!log.ok && r_.failed_stage.empty()) r_.failed_stage = name;
    return log.ok;
  }

 private:
  PipelineResult& r_;
};

std::string ids(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

template <class T>
FloatSolution solve_or_import(const DensitySdp<T>& p, const PipelineOptions& opt) {
  SdpaData d = to_sdpa(p);
  if (opt.sdpa_out) {
    std::ofstream out(*opt.sdpa_out);
    if (!out) throw std::runtime_error("cannot write " + *opt.sdpa_out);
    out << write_sdpa(d);
  }
  if (opt.solution_text) return read_solution(*opt.solution_text, d, p.shape);
  FloatSolution s = solve_sdpa(d, p.shape, opt.solver);
  if (!s.converged) throw std::runtime_error("solver: " + s.status);
  return s;
}

std::string solve_detail(const FloatSolution& s) {
  std::ostringstream os;
  os << "alpha≈" << s.alpha << " iterations=" << s.iterations << " gap=" << s.gap << " status=" << s.status;
  return os.str();
}

}  // namespace

SdpProblem pipeline_problem(const PipelineOptions& opt) {
  if (opt.k == 4 && opt.kind == Kind::Oriented) return assemble(4, main_family(), opt.weights);
  if (opt.k == 3) return assemble(3, vertex_family(opt.kind), opt.weights);
  throw std::invalid_argument("pipeline: supported runs are k=3 (oriented or undirected) and k=4 (oriented)");
}

PipelineResult full_pipeline(const PipelineOptions& opt) {
  PipelineResult r;
  Stages st(r);
  SdpProblem problem;
  if (!st.run("assemble", [&](std::string& d) {
        problem = pipeline_problem(opt);
        d = "m=" + std::to_string(problem.m()) + " blocks=" + std::to_string(problem.shape.size());
        return std::string();
      }))
    return r;

  if (opt.k == 3) {
    if (!st.run("solve", [&](std::string& d) {
          r.float_solution = solve_or_import(problem, opt);
          d = solve_detail(r.float_solution);
          return std::string();
        }))
      return r;
    RoundingResult rr;
    if (!st.run("round", [&](std::string& d) {
          std::vector<int> tight = tight_classes(r.float_solution, 1e-6);
          rr = round_certificate(r.float_solution.Q, problem, tight, opt.alpha, opt.rounding);
          d = "equalities " + ids(tight) + ": " + rr.diagnostics;
          return rr.ok ? std::string() : "rounding failed: " + rr.diagnostics;
        }))
      return r;
    r.certificate = rr.certificate;
  } else {
    const FlagFamily family = main_family();
    std::vector<KernelVector> kernel;
    Projection proj;
    DensitySdp<QuadExt> projected;
    if (!st.run("kernel", [&](std::string& d) {
          kernel = derive_kernel_constraints(family);
          d = std::to_string(kernel.size()) + " vectors";
          return std::string();
        }))
      return r;
    if (!st.run("sharp", [&](std::string& d) {
          r.sharp = detect_sharp(4);
          r.tournaments = tournament_classes(4);
          d = "sharp " + ids(r.sharp->all) + " induced " + ids(r.sharp->induced) + " eps-linear " + ids(r.sharp->eps_linear);
          return r.sharp->all.size() == 11 ? std::string() : "expected 11 sharp classes, found " + std::to_string(r.sharp->all.size());
        }))
      return r;
    if (!st.run("ledger", [&](std::string& d) {
          r.ledger = build_ledger(family, kernel, *r.sharp, problem, opt.alpha);
          d = "dim W=" + std::to_string(r.ledger->dim_w()) + " dim W~=" + std::to_string(r.ledger->dim_w_tilde());
          return std::string();
        }))
      return r;
    if (!st.run("projection", [&](std::string& d) {
          proj = build_projection(family, kernel);
          projected = project_problem(problem, proj);
          for (const auto& [name, n] : proj.projected_shape()) d += name + ":" + std::to_string(n) + " ";
          return std::string();
        }))
      return r;
    if (!st.run("solve", [&](std::string& d) {
          r.float_solution = solve_or_import(projected, opt);
          d = solve_detail(r.float_solution);
          return std::string();
        }))
      return r;
    RoundingResult rr;
    if (!st.run("round", [&](std::string& d) {
          rr = round_certificate(r.float_solution.Q, projected, r.sharp->all, opt.alpha, opt.rounding);
          d = rr.diagnostics + " solved entries=" + std::to_string(rr.solved_entries.size());
          if (!rr.ok) return "rounding failed: " + rr.diagnostics;
          return rr.pd ? std::string() : std::string("rounded projected matrix is not positive definite");
        }))
      return r;
    r.projected = rr.certificate;
    if (!st.run("pull-back", [&](std::string&) {
          r.certificate = {pull_back(proj, rr.certificate.Q), opt.alpha, Provenance::RoundedFromSolver};
          return std::string();
        }))
      return r;
  }

  st.run("verify", [&](std::string& d) {
    r.report = verify(r.certificate, problem);
    d = "psd=" + std::string(r.report.psd_ok ? "yes" : "no") + " negative slacks=" +
        std::to_string(r.report.negative_slacks) + " equalities " + ids(r.report.equality);
    if (!r.report.valid()) return std::string("certificate does not verify");
    if (r.sharp) {
      if (r.report.equality != r.sharp->all) return "equality set " + ids(r.report.equality) + " differs from the sharp set";
      for (int t : r.tournaments)
        if (sign_of(r.report.slack[static_cast<std::size_t>(t)]) <= 0)
          return "tournament class " + std::to_string(t) + " has zero slack";
    }
    return std::string();
  });
  r.ok = r.failed_stage.empty();
  return r;
}

}  // namespace flagcert
