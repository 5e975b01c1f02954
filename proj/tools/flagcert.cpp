#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flagcert/certify.hpp"
#include "flagcert/graph_json.hpp"
#include "flagcert/scalar_json.hpp"

using namespace flagcert;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kInvalid = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") std::cout << text;
  else write_file(out, text);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

Kind parse_theory(const std::string& t) {
  if (t == "oriented") return Kind::Oriented;
  if (t == "undirected") return Kind::Undirected;
  throw UsageError("--theory must be oriented or undirected");
}

ObjectiveWeights parse_weights(const std::string& s) {
  ObjectiveWeights w;
  if (s.empty()) return w;
  auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--weights expects two rationals 't,i'");
  try {
    w.transitive = parse_rational(s.substr(0, comma));
    w.independent = parse_rational(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("--weights expects two rationals 't,i'");
  }
  return w;
}

Rational parse_alpha(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError("--alpha expects a rational such as 1/9");
  }
}

std::string kind_name(Kind k) { return k == Kind::Oriented ? "oriented" : "undirected"; }

struct ProblemArgs {
  int k = 4;
  std::string theory = "oriented";
  std::string weights;
  bool projected = false;

  void add(CLI::App* app, bool with_projected) {
    app->add_option("--k", k, "class order (3 or 4)")->check(CLI::Range(3, 4));
    app->add_option("--theory", theory, "oriented or undirected")->check(CLI::IsMember({"oriented", "undirected"}));
    app->add_option("--weights", weights, "objective weights 't,i' (default 1,1)");
    if (with_projected) app->add_flag("--projected", projected, "use the projected k=4 problem");
  }
  PipelineOptions options() const {
    PipelineOptions o;
    o.k = k;
    o.kind = parse_theory(theory);
    o.weights = parse_weights(weights);
    return o;
  }
  SdpProblem problem() const {
    try {
      return pipeline_problem(options());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  DensitySdp<QuadExt> projected_problem() const {
    if (k != 4) throw UsageError("--projected needs --k 4");
    FlagFamily f = main_family();
    return project_problem(problem(), build_projection(f, derive_kernel_constraints(f)));
  }
};

Graph load_graph(const std::string& path, const std::string& inline_spec) {
  if (path.empty() == inline_spec.empty()) throw UsageError("give exactly one of --graph FILE or --spec JSON");
  json spec = parse_json(path.empty() ? inline_spec : read_file(path), "graph spec");
  if (!spec.contains("kind") || spec.at("kind") == "oriented" || spec.at("kind") == "undirected") return graph_from_json(spec);
  return build_construction(spec);
}

json shape_json(const std::vector<std::pair<std::string, int>>& shape) {
  json s = json::array();
  for (const auto& [t, n] : shape) s.push_back({{"type", t}, {"order", n}});
  return s;
}

json class_json(const IsoClassTable& t, int id) {
  const Graph& g = t.graph(id);
  return {{"id", id},
          {"edges", static_cast<int>(g.edges().size())},
          {"canonical", canonical_form(g)},
          {"graph", graph_to_json(g)},
          {"t", to_string(t_density(g))},
          {"i", to_string(i_density(g))}};
}

json solution_json(const FloatSolution& s) {
  return {{"alpha", s.alpha},   {"iterations", s.iterations},     {"gap", s.gap},
          {"status", s.status}, {"converged", s.converged},       {"p", s.p},
          {"slack", s.slack},   {"tight", tight_classes(s, 1e-6)}};
}

json stages_json(const PipelineResult& r) {
  json log = json::array();
  for (const auto& s : r.log) log.push_back({{"stage", s.stage}, {"ok", s.ok}, {"detail", s.detail}});
  return log;
}

void print_timings(const PipelineResult& r) {
  for (const auto& s : r.log) std::cerr << s.stage << ": " << s.seconds << " s\n";
}

Certificate<QuadExt> as_quad(const BlockSymMatrix<Rational>& q, const Rational& alpha) {
  return {to_quad(q), alpha, Provenance::PaperData};
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("FLAGCERT_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Flag-algebra certificates for t(G) + i(G) on oriented graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("-o,--output", out, "write JSON here instead of stdout");
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "progress and timings on stderr");

  // enumerate
  auto* en = app.add_subcommand("enumerate", "isomorphism classes on k vertices");
  int en_k = 4;
  std::string en_theory = "oriented";
  en->add_option("--k", en_k, "number of vertices")->check(CLI::Range(1, 5));
  en->add_option("--theory", en_theory, "oriented or undirected")->check(CLI::IsMember({"oriented", "undirected"}));

  // densities
  auto* de = app.add_subcommand("densities", "induced k-vertex class densities of a graph");
  std::string de_graph, de_spec, de_theory = "oriented";
  int de_k = 4;
  de->add_option("--graph", de_graph, "graph or construction JSON file");
  de->add_option("--spec", de_spec, "inline graph or construction JSON");
  de->add_option("--k", de_k, "class order")->check(CLI::Range(1, 5));

  // matrices
  auto* ma = app.add_subcommand("matrices", "flag matrices A_G of a graph, or of every class");
  std::string ma_graph, ma_spec;
  ProblemArgs ma_args;
  bool ma_tilde = false;
  ma->add_option("--graph", ma_graph, "graph or construction JSON file");
  ma->add_option("--spec", ma_spec, "inline graph or construction JSON");
  ma->add_flag("--tilde", ma_tilde, "the matrix built from disjoint petal pairs");
  ma_args.add(ma, false);

  auto* as = app.add_subcommand("assemble", "the density SDP: c and A_i");
  ProblemArgs as_args;
  as_args.add(as, true);

  auto* ex = app.add_subcommand("sdpa-export", "write the SDP in SDPA sparse format");
  ProblemArgs ex_args;
  std::string ex_out;
  ex_args.add(ex, true);
  ex->add_option("--sdpa-out", ex_out, "output file (default stdout)");

  auto* so = app.add_subcommand("solve", "solve the SDP in floating point");
  ProblemArgs so_args;
  SolverOptions so_opt;
  std::string so_sdpa, so_in, so_sol_out;
  so_args.add(so, true);
  so->add_option("--tol", so_opt.tol, "relative gap and infeasibility tolerance");
  so->add_option("--max-iters", so_opt.max_iters, "iteration cap");
  so->add_option("--sdpa-out", so_sdpa, "also write the problem as SDPA");
  so->add_option("--solution-in", so_in, "read an SDPA solution instead of solving");
  so->add_option("--solution-out", so_sol_out, "write the solution in SDPA solution format");

  app.add_subcommand("kernel", "kernel vectors of the main family");
  app.add_subcommand("sharp", "sharp 4-vertex classes");

  auto* pr = app.add_subcommand("project", "projection onto the complement of the kernel vectors");
  bool pr_matrices = false;
  pr->add_flag("--matrices", pr_matrices, "include the projected class matrices");

  PipelineOptions pipe_opt;
  std::string pipe_alpha = "1/9", pipe_in, pipe_sdpa, pipe_out = "certificate.json", pipe_theory = "oriented",
              pipe_weights;
  auto add_pipeline_options = [&](CLI::App* a) {
    a->add_option("--k", pipe_opt.k, "class order (3 or 4)")->check(CLI::Range(3, 4));
    a->add_option("--theory", pipe_theory, "oriented or undirected")->check(CLI::IsMember({"oriented", "undirected"}));
    a->add_option("--weights", pipe_weights, "objective weights 't,i'");
    a->add_option("--alpha", pipe_alpha, "target bound, e.g. 1/9");
    a->add_option("--tol", pipe_opt.solver.tol, "solver tolerance");
    a->add_option("--max-iters", pipe_opt.solver.max_iters, "solver iteration cap");
    a->add_option("--solution-in", pipe_in, "SDPA solution of the (projected) problem");
    a->add_option("--sdpa-out", pipe_sdpa, "write the (projected) problem as SDPA");
    a->add_option("--cert", pipe_out, "certificate output file");
  };
  auto* ro = app.add_subcommand("round", "round a float solution to an exact certificate");
  add_pipeline_options(ro);
  auto* pi = app.add_subcommand("pipeline", "solve, round and verify end to end");
  add_pipeline_options(pi);

  auto* ve = app.add_subcommand("verify", "exact verification of a certificate file");
  std::string ve_cert, ve_alpha, ve_theory, ve_weights;
  int ve_k = 0;
  ve->add_option("--cert", ve_cert, "certificate JSON")->required();
  ve->add_option("--k", ve_k, "class order (default: from the file)")->check(CLI::Range(3, 4));
  ve->add_option("--theory", ve_theory, "oriented or undirected (default: from the file)");
  ve->add_option("--weights", ve_weights, "objective weights 't,i' (default: from the file)");
  ve->add_option("--alpha", ve_alpha, "bound to check (default: from the file)");

  auto* ta = app.add_subcommand("tau", "exact minimum of t + i over n-vertex oriented graphs");
  int ta_n = 5;
  ta->add_option("--n", ta_n, "number of vertices")->check(CLI::Range(3, 6));

  app.add_subcommand("resolve-indices", "map literature class indices to class ids");

  auto* fx = app.add_subcommand("fixtures", "write the reference certificates and constructions");
  std::string fx_dir = "fixtures";
  fx->add_option("--dir", fx_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) {
      const IsoClassTable& t = iso_table(en_k, parse_theory(en_theory));
      json classes = json::array();
      for (int id = 0; id < t.size(); ++id) classes.push_back(class_json(t, id));
      emit({{"k", en_k}, {"theory", en_theory}, {"count", t.size()}, {"classes", classes}}, out);
      return kOk;
    }
    if (*de) {
      Graph g = load_graph(de_graph, de_spec);
      if (g.order() < de_k) throw UsageError("graph has fewer than --k vertices");
      const IsoClassTable& t = iso_table(de_k, g.kind());
      json d = json::object();
      std::vector<Rational> p = density_profile(t, g);
      for (int id = 0; id < t.size(); ++id)
        if (sgn(p[static_cast<std::size_t>(id)]) != 0) d[std::to_string(id)] = to_string(p[static_cast<std::size_t>(id)]);
      json j = {{"n", g.order()}, {"k", de_k}, {"densities", d}};
      if (g.kind() == Kind::Oriented && g.order() >= 3)
        j.update({{"t", to_string(t_density(g))}, {"i", to_string(i_density(g))}, {"c", to_string(c_density(g))},
                  {"t_plus_i", to_string(Rational(t_density(g) + i_density(g)))}});
      emit(j, out);
      return kOk;
    }
    if (*ma) {
      PipelineOptions o = ma_args.options();
      FlagFamily f = o.k == 4 ? main_family() : vertex_family(o.kind);
      auto matrices_of = [&](const Graph& g) {
        return to_json_blocks(ma_tilde ? flag_matrix_tilde(f, g) : flag_matrix(f, g));
      };
      if (!ma_graph.empty() || !ma_spec.empty()) {
        Graph g = load_graph(ma_graph, ma_spec);
        if (g.kind() != f.kind) throw UsageError("graph kind does not match --theory");
        emit({{"family", family_manifest(f)}, {"matrix", matrices_of(g)}}, out);
      } else {
        const IsoClassTable& t = iso_table(o.k, o.kind);
        json all = json::array();
        for (int id = 0; id < t.size(); ++id) all.push_back({{"id", id}, {"matrix", matrices_of(t.graph(id))}});
        emit({{"family", family_manifest(f)}, {"classes", all}}, out);
      }
      return kOk;
    }
    if (*as) {
      json j;
      if (as_args.projected) {
        auto p = as_args.projected_problem();
        json a = json::array();
        for (const auto& m : p.A) a.push_back(to_json_blocks(m));
        j = {{"m", p.m()}, {"shape", shape_json(p.shape)}, {"A", a}};
        json c = json::array();
        for (const auto& x : p.c) c.push_back(to_string(x));
        j["c"] = c;
      } else {
        auto p = as_args.problem();
        json a = json::array();
        for (const auto& m : p.A) a.push_back(to_json_blocks(m));
        json c = json::array();
        for (const auto& x : p.c) c.push_back(to_string(x));
        j = {{"m", p.m()}, {"shape", shape_json(p.shape)}, {"c", c}, {"A", a}};
      }
      emit(j, out);
      return kOk;
    }
    if (*ex) {
      SdpaData d = ex_args.projected ? to_sdpa(ex_args.projected_problem()) : to_sdpa(ex_args.problem());
      if (ex_out.empty()) std::cout << write_sdpa(d);
      else write_file(ex_out, write_sdpa(d));
      return kOk;
    }
    if (*so) {
      so_opt.verbose = verbose;
      SdpaData d;
      std::vector<std::pair<std::string, int>> shape;
      if (so_args.projected) {
        auto p = so_args.projected_problem();
        d = to_sdpa(p);
        shape = p.shape;
      } else {
        auto p = so_args.problem();
        d = to_sdpa(p);
        shape = p.shape;
      }
      if (!so_sdpa.empty()) write_file(so_sdpa, write_sdpa(d));
      FloatSolution s = so_in.empty() ? solve_sdpa(d, shape, so_opt) : read_solution(read_file(so_in), d, shape);
      if (!so_sol_out.empty()) write_file(so_sol_out, write_solution(s, d));
      emit(solution_json(s), out);
      return s.converged ? kOk : kInvalid;
    }
    if (app.got_subcommand("kernel")) {
      json j = json::array();
      for (const auto& v : derive_kernel_constraints(main_family())) {
        json vec = json::array();
        for (const auto& x : v.vector) vec.push_back(to_string(x));
        j.push_back({{"type", v.type}, {"block", v.block}, {"origin", v.origin}, {"vector", vec}});
      }
      emit({{"family", family_manifest(main_family())}, {"kernel_vectors", j}}, out);
      return kOk;
    }
    if (app.got_subcommand("sharp")) {
      SharpSet s = detect_sharp(4);
      auto eps = expected_densities_Bn_eps(4);
      json poly = json::object();
      for (int i : s.all) poly[std::to_string(i)] = eps[static_cast<std::size_t>(i)].to_string();
      emit({{"sharp", s.all},
            {"induced", s.induced},
            {"eps_linear", s.eps_linear},
            {"tournaments", tournament_classes(4)},
            {"expected_density", poly}},
           out);
      return kOk;
    }
    if (*pr) {
      FlagFamily f = main_family();
      Projection p = build_projection(f, derive_kernel_constraints(f));
      json blocks = json::array();
      for (std::size_t b = 0; b < p.R.size(); ++b) {
        json rows = json::array();
        for (int i = 0; i < p.R[b].rows(); ++i) {
          json row = json::array();
          for (int j = 0; j < p.R[b].cols(); ++j) row.push_back(to_json_scalar(p.R[b](i, j)));
          rows.push_back(row);
        }
        json n2 = json::array();
        for (const auto& x : p.norm2[b]) n2.push_back(to_string(x));
        blocks.push_back({{"type", p.types[b]}, {"rows", p.R[b].rows()}, {"cols", p.R[b].cols()}, {"R", rows}, {"norm2", n2}});
      }
      json j = {{"projected_shape", shape_json(p.projected_shape())}, {"blocks", blocks}};
      if (pr_matrices) {
        auto pp = project_problem(assemble(4, f), p);
        json a = json::array();
        for (const auto& m : pp.A) a.push_back(to_json_blocks(m));
        j["A"] = a;
      }
      emit(j, out);
      return kOk;
    }
    if (*ro || *pi) {
      pipe_opt.kind = parse_theory(pipe_theory);
      pipe_opt.weights = parse_weights(pipe_weights);
      pipe_opt.alpha = parse_alpha(pipe_alpha);
      pipe_opt.solver.verbose = verbose;
      if (!pipe_in.empty()) pipe_opt.solution_text = read_file(pipe_in);
      if (!pipe_sdpa.empty()) pipe_opt.sdpa_out = pipe_sdpa;
      if (pipe_opt.k == 4 && pipe_opt.kind != Kind::Oriented) throw UsageError("k=4 runs are oriented only");
      PipelineResult r = full_pipeline(pipe_opt);
      if (verbose) print_timings(r);
      const SdpProblem problem = pipeline_problem(pipe_opt);
      const bool rounded = std::any_of(r.log.begin(), r.log.end(), [](const StageLog& s) { return s.stage == "round" && s.ok; });
      json j = {{"ok", *ro ? rounded : r.ok}, {"failed_stage", r.failed_stage}, {"stages", stages_json(r)}};
      if (rounded) {
        const bool with_report = *pi && !r.report.slack.empty();
        write_file(pipe_out, certificate_to_json(r.certificate, problem, with_report ? &r.report : nullptr).dump(2) + "\n");
        j["certificate"] = pipe_out;
        if (with_report) j["report"] = report_to_json(r.report);
        if (r.projected) j["projected"] = to_json_blocks(r.projected->Q);
      }
      emit(j, out);
      return (*ro ? rounded : r.ok) ? kOk : kInvalid;
    }
    if (*ve) {
      json cj = parse_json(read_file(ve_cert), "certificate");
      Certificate<QuadExt> c = certificate_from_json(cj);
      if (ve_k) cj["k"] = ve_k;
      if (!ve_theory.empty()) cj["kind"] = kind_name(parse_theory(ve_theory));
      if (!ve_weights.empty()) {
        ObjectiveWeights w = parse_weights(ve_weights);
        cj["weights"] = {{"transitive", to_string(w.transitive)}, {"independent", to_string(w.independent)}};
      }
      if (!ve_alpha.empty()) c.alpha = parse_alpha(ve_alpha);
      if (!cj.contains("k")) throw UsageError("certificate has no \"k\"; pass --k");
      SdpProblem problem = problem_from_certificate_json(cj);
      if (c.Q.shape() != problem.shape) throw UsageError("certificate blocks do not match the k=" + std::to_string(problem.k) + " family");
      VerificationReport rep = verify(c, problem);
      json j = report_to_json(rep);
      j["alpha"] = to_string(c.alpha);
      emit(j, out);
      return rep.valid() ? kOk : kInvalid;
    }
    if (*ta) {
      TauResult t = brute_force_tau(ta_n);
      emit({{"n", ta_n}, {"tau", to_string(t.value)}, {"witness", graph_to_json(t.witness)}}, out);
      return kOk;
    }
    if (app.got_subcommand("resolve-indices")) {
      json j = json::array();
      for (const auto& l : resolve_paper_indices())
        j.push_back({{"paper", l.paper}, {"classes", l.artifact}, {"resolved", l.resolved}, {"basis", l.basis}});
      emit(j, out);
      return kOk;
    }
    if (*fx) {
      std::filesystem::create_directories(fx_dir);
      const auto qt = BlockSymMatrix<Rational>({{"vertex", SymMatrix<Rational>::from_rows(
                                                                 {{frac(9, 10), frac(-3, 5), frac(-3, 5)},
                                                                  {frac(-3, 5), frac(9, 10), frac(-1, 10)},
                                                                  {frac(-3, 5), frac(-1, 10), frac(9, 10)}})}});
      const auto gm = BlockSymMatrix<Rational>(
          {{"vertex", SymMatrix<Rational>::from_rows({{frac(3, 4), frac(-3, 4)}, {frac(-3, 4), frac(3, 4)}})}});
      auto k3 = assemble(3, vertex_family());
      auto g3 = assemble(3, vertex_family(Kind::Undirected));
      auto c1 = as_quad(qt, frac(1, 10));
      auto c2 = as_quad(gm, frac(1, 4));
      auto r1 = verify(c1, k3);
      auto r2 = verify(c2, g3);
      auto path = [&](const char* name) { return (std::filesystem::path(fx_dir) / name).string(); };
      write_file(path("toy_k3.json"), certificate_to_json(c1, k3, &r1).dump(2) + "\n");
      write_file(path("goodman.json"), certificate_to_json(c2, g3, &r2).dump(2) + "\n");
      write_file(path("circulant_7_1_3.json"), json({{"kind", "circulant"}, {"n", 7}, {"steps", {1, 3}}}).dump(2) + "\n");
      write_file(path("circulant_8_2_3.json"), json({{"kind", "circulant"}, {"n", 8}, {"steps", {2, 3}}}).dump(2) + "\n");
      write_file(path("blowup_9.json"), json({{"kind", "blowup"}, {"n", 9}}).dump(2) + "\n");
      emit({{"dir", fx_dir},
            {"files", {"toy_k3.json", "goodman.json", "circulant_7_1_3.json", "circulant_8_2_3.json", "blowup_9.json"}}},
           out);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
