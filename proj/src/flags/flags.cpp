#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "flagcert/flags.hpp"

namespace flagcert {

TypeGraph empty_type(Kind kind) { return {"empty", Graph(0, kind)}; }
TypeGraph vertex_type(Kind kind) { return {"vertex", Graph(1, kind)}; }
TypeGraph nonedge_type() { return {"nonedge", Graph(2)}; }
TypeGraph edge_type() { return {"edge", Graph::from_edges(2, {{0, 1}})}; }

namespace {

int petal_edges(const std::string& code, int k, int total) {
  int count = 0;
  std::size_t p = 0;
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j, ++p)
      if (j >= k && code[p] != '0') ++count;
  return count;
}

}  // namespace

FlagBlock::FlagBlock(TypeGraph type, int petals) : type_(std::move(type)), petals_(petals) {
  if (petals < 0) throw std::invalid_argument("FlagBlock: negative petal count");
  const int k = type_.order(), total = k + petals;
  if (total > 10) throw std::invalid_argument("FlagBlock: flags larger than 10 vertices");
  const Kind kind = type_.graph.kind();
  const std::vector<int> digits = kind == Kind::Oriented ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 3};

  // free pairs: those touching a petal
  std::vector<std::pair<int, int>> free_pairs;
  for (int i = 0; i < total; ++i)
    for (int j = std::max(i + 1, k); j < total; ++j) free_pairs.emplace_back(i, j);

  std::vector<std::string> found;
  std::vector<int> choice(free_pairs.size(), 0);
  while (true) {
    Graph g(total, kind);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) g.set_arc(i, j, type_.graph.arc(i, j));
    for (std::size_t p = 0; p < free_pairs.size(); ++p)
      g.set_arc(free_pairs[p].first, free_pairs[p].second, static_cast<Arc>(digits[static_cast<std::size_t>(choice[p])]));
    std::string c = rooted_canonical_form(g, k);
    if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == static_cast<int>(digits.size()) - 1) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  std::sort(found.begin(), found.end(), [&](const std::string& a, const std::string& b) {
    int ea = petal_edges(a, k, total), eb = petal_edges(b, k, total);
    return ea != eb ? ea < eb : a < b;
  });
  std::vector<int> roots(static_cast<std::size_t>(k));
  std::iota(roots.begin(), roots.end(), 0);
  for (const auto& c : found) {
    canon_.push_back(c);
    flags_.push_back({type_, decode(total, c, kind), roots});
  }

  if (total <= IsoClassTable::kMaxOrder) {
    const int pairs = total * (total - 1) / 2;
    lookup_.assign(std::size_t{1} << (2 * pairs), -1);
    std::vector<int> perm(static_cast<std::size_t>(total));
    for (std::size_t f = 0; f < flags_.size(); ++f) {
      std::iota(perm.begin(), perm.end(), 0);
      do lookup_[pair_code(flags_[f].graph, perm.data(), total)] = static_cast<std::int16_t>(f);
      while (std::next_permutation(perm.begin() + k, perm.end()));
    }
  }
}

int FlagBlock::classify(const Graph& host, const int* verts) const {
  const int total = type_.order() + petals_;
  if (!lookup_.empty()) return lookup_[pair_code(host, verts, total)];
  std::vector<int> v(verts, verts + total);
  std::string c = rooted_canonical_form(host.induced(v), type_.order());
  auto it = std::find(canon_.begin(), canon_.end(), c);
  return it == canon_.end() ? -1 : static_cast<int>(it - canon_.begin());
}

int FlagBlock::index_of(const Flag& f) const {
  if (f.type.name != type_.name || f.type.graph != type_.graph || f.petals() != petals_) return -1;
  std::vector<int> order = f.roots;
  for (int v = 0; v < f.graph.order(); ++v)
    if (std::find(f.roots.begin(), f.roots.end(), v) == f.roots.end()) order.push_back(v);
  return classify(f.graph, order.data());
}

std::vector<Flag> enumerate_flags(const TypeGraph& sigma, int petals) {
  return FlagBlock(sigma, petals).flags();
}

std::vector<std::pair<std::string, int>> FlagFamily::shape() const {
  std::vector<std::pair<std::string, int>> s;
  for (const auto& b : blocks) s.emplace_back(b.type().name, b.size());
  return s;
}

int FlagFamily::total_flags() const {
  int t = 0;
  for (const auto& b : blocks) t += b.size();
  return t;
}

int FlagFamily::required_order() const {
  int r = 0;
  for (const auto& b : blocks) r = std::max(r, b.type().order() + 2 * b.petals());
  return r;
}

FlagFamily main_family() {
  FlagFamily f;
  f.kind = Kind::Oriented;
  f.blocks.emplace_back(empty_type(), 2);
  f.blocks.emplace_back(nonedge_type(), 1);
  f.blocks.emplace_back(edge_type(), 1);
  return f;
}

FlagFamily vertex_family(Kind kind) {
  FlagFamily f;
  f.kind = kind;
  f.blocks.emplace_back(vertex_type(kind), 1);
  return f;
}

std::vector<std::vector<int>> rootings(const TypeGraph& sigma, const Graph& g) {
  const int k = sigma.order(), n = g.order();
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  if (k == 0) return {std::vector<int>{}};
  std::vector<int> ids(static_cast<std::size_t>(k));
  std::iota(ids.begin(), ids.end(), 0);
  const std::uint32_t want = pair_code(sigma.graph, ids.data(), k);
  std::vector<int> tuple(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // depth-first over injective tuples in lexicographic order
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (pair_code(g, tuple.data(), k) == want) out.push_back(tuple);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i)
        ok = g.arc(tuple[static_cast<std::size_t>(i)], v) == sigma.graph.arc(i, depth);
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = true;
      tuple[static_cast<std::size_t>(depth)] = v;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

nlohmann::json family_manifest(const FlagFamily& family) {
  nlohmann::json types = nlohmann::json::array();
  for (const auto& b : family.blocks) {
    nlohmann::json flags = nlohmann::json::array();
    for (int i = 0; i < b.size(); ++i) {
      const Flag& f = b.flag(i);
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [u, v] : f.graph.edges()) edges.push_back({u, v});
      flags.push_back({{"index", i}, {"n", f.graph.order()}, {"edges", edges}, {"roots", f.roots},
                       {"canonical", b.canonical(i)}});
    }
    nlohmann::json type_edges = nlohmann::json::array();
    for (const auto& [u, v] : b.type().graph.edges()) type_edges.push_back({u, v});
    types.push_back({{"type", b.type().name},
                     {"order", b.type().order()},
                     {"edges", type_edges},
                     {"petals", b.petals()},
                     {"flags", flags}});
  }
  return {{"kind", family.kind == Kind::Oriented ? "oriented" : "undirected"}, {"types", types}};
}

}  // namespace flagcert
