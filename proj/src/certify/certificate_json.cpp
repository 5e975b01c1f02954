#include <stdexcept>

#include "flagcert/certify.hpp"
#include "flagcert/scalar_json.hpp"

namespace flagcert {

namespace {

const char* kRationalRing = "Q";
const char* kQuadRing = "Q(sqrt2,sqrt3)";

// Rational values as "p/q" strings, others as their nonzero coordinates.
json compact(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.a());
  json o = json::object();
  const char* keys[] = {"1", "sqrt2", "sqrt3", "sqrt6"};
  for (int i = 0; i < 4; ++i)
    if (sgn(x.coord(i)) != 0) o[keys[i]] = to_string(x.coord(i));
  return o;
}

std::string kind_name(Kind k) { return k == Kind::Oriented ? "oriented" : "undirected"; }

}  // namespace

json report_to_json(const VerificationReport& r) {
  json slacks = json::array();
  for (const auto& s : r.slack) slacks.push_back(compact(s));
  return {{"valid", r.valid()},         {"psd", r.psd_ok},           {"pd", r.pd},
          {"negative_slacks", r.negative_slacks}, {"equality", r.equality}, {"kernel_dim", r.kernel_dim},
          {"slacks", slacks}};
}

json certificate_to_json(const Certificate<QuadExt>& cert, const SdpProblem& problem, const VerificationReport* report) {
  json blocks = json::array();
  for (const auto& b : cert.Q.blocks()) {
    bool rational = true;
    json rows = json::array();
    for (int i = 0; i < b.matrix.order(); ++i) {
      json row = json::array();
      for (int j = 0; j < b.matrix.order(); ++j) {
        rational = rational && b.matrix(i, j).is_rational();
        row.push_back(compact(b.matrix(i, j)));
      }
      rows.push_back(std::move(row));
    }
    blocks.push_back({{"type", b.type},
                      {"order", b.matrix.order()},
                      {"scalar_ring", rational ? kRationalRing : kQuadRing},
                      {"entries", std::move(rows)}});
  }
  json out = {{"alpha", to_string(cert.alpha)},
              {"k", problem.k},
              {"kind", kind_name(problem.kind)},
              {"weights", {{"transitive", to_string(problem.weights.transitive)},
                           {"independent", to_string(problem.weights.independent)}}},
              {"provenance", to_string(cert.provenance)},
              {"blocks", std::move(blocks)}};
  if (report) out["report"] = report_to_json(*report);
  return out;
}

Certificate<QuadExt> certificate_from_json(const json& j) {
  try {
    Certificate<QuadExt> c;
    c.alpha = rational_from_json(j.at("alpha"));
    c.provenance = j.contains("provenance") ? provenance_from_string(j.at("provenance").get<std::string>())
                                            : Provenance::Handcrafted;
    std::vector<Block<QuadExt>> blocks;
    for (const auto& b : j.at("blocks")) {
      const std::string ring = b.value("scalar_ring", std::string(kQuadRing));
      if (ring != kRationalRing && ring != kQuadRing) throw std::runtime_error("unknown scalar ring '" + ring + "'");
      SymMatrix<QuadExt> m = sym_from_json_rows<QuadExt>(b.at("entries"));
      if (b.contains("order") && b.at("order").get<int>() != m.order())
        throw std::runtime_error("block '" + b.at("type").get<std::string>() + "': order does not match its entries");
      if (ring == kRationalRing)
        for (int r = 0; r < m.order(); ++r)
          for (int s = r; s < m.order(); ++s)
            if (!m(r, s).is_rational()) throw std::runtime_error("ring mismatch: irrational entry in a block over Q");
      blocks.push_back({b.at("type").get<std::string>(), std::move(m)});
    }
    c.Q = BlockSymMatrix<QuadExt>(std::move(blocks));
    return c;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
}

SdpProblem problem_from_certificate_json(const json& j) {
  try {
    PipelineOptions o;
    o.k = j.at("k").get<int>();
    const std::string kind = j.value("kind", std::string("oriented"));
    if (kind != "oriented" && kind != "undirected") throw std::runtime_error("unknown kind '" + kind + "'");
    o.kind = kind == "oriented" ? Kind::Oriented : Kind::Undirected;
    if (j.contains("weights")) {
      o.weights.transitive = rational_from_json(j.at("weights").at("transitive"));
      o.weights.independent = rational_from_json(j.at("weights").at("independent"));
    }
    return pipeline_problem(o);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace flagcert
