#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "flagcert/graph.hpp"

namespace flagcert {

std::string encode(const Graph& g, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::string s;
  s.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s.push_back(static_cast<char>('0' + static_cast<int>(g.arc(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))));
  return s;
}

Graph decode(int n, const std::string& code, Kind kind) {
  if (static_cast<int>(code.size()) != n * (n - 1) / 2) throw std::invalid_argument("decode: length mismatch");
  Graph g(n, kind);
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) {
      int d = code[p] - '0';
      if (d < 0 || d > 3) throw std::invalid_argument("decode: bad digit");
      g.set_arc(i, j, static_cast<Arc>(d));
    }
  return g;
}

std::string rooted_canonical_form(const Graph& g, int fixed) {
  const int n = g.order();
  if (n > 10) throw std::invalid_argument("canonical_form: order " + std::to_string(n) + " too large (max 10)");
  if (fixed < 0 || fixed > n) throw std::invalid_argument("rooted_canonical_form: bad root count");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = encode(g, perm);
  while (std::next_permutation(perm.begin() + fixed, perm.end())) {
    std::string s = encode(g, perm);
    if (s < best) best = std::move(s);
  }
  return best;
}

std::string canonical_form(const Graph& g) { return rooted_canonical_form(g, 0); }

namespace {

int edges_in_code(const std::string& s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [](char c) { return c != '0'; }));
}

}  // namespace

IsoClassTable::IsoClassTable(int k, Kind kind) : k_(k), kind_(kind) {
  if (k < 1 || k > kMaxOrder) throw std::invalid_argument("IsoClassTable: order must be in 1..5");
  const int pairs = k * (k - 1) / 2;
  lookup_.assign(std::size_t{1} << (2 * pairs), -1);
  const std::vector<int> digits = kind == Kind::Oriented ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 3};

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  // Walk every labeled graph of this kind; the first time an orbit is met,
  // label all of its relabelings at once.
  std::vector<std::string> found;
  std::vector<int> choice(static_cast<std::size_t>(pairs), 0);
  std::vector<int> verts(static_cast<std::size_t>(k));
  while (true) {
    Graph g(k, kind);
    std::size_t p = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j, ++p)
        g.set_arc(i, j, static_cast<Arc>(digits[static_cast<std::size_t>(choice[p])]));
    std::iota(verts.begin(), verts.end(), 0);
    if (lookup_[pair_code(g, verts.data(), k)] < 0) {
      const auto id = static_cast<std::int16_t>(found.size());
      std::string best;
      for (const auto& q : perms) {
        lookup_[pair_code(g, q.data(), k)] = id;
        std::string s = encode(g, q);
        if (best.empty() || s < best) best = std::move(s);
      }
      found.push_back(best.empty() ? std::string() : best);
    }
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == static_cast<int>(digits.size()) - 1) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }

  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& sa = found[static_cast<std::size_t>(a)];
    const auto& sb = found[static_cast<std::size_t>(b)];
    int ea = edges_in_code(sa), eb = edges_in_code(sb);
    return ea != eb ? ea < eb : sa < sb;
  });
  std::vector<std::int16_t> remap(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    remap[static_cast<std::size_t>(order[r])] = static_cast<std::int16_t>(r);
    canon_.push_back(found[static_cast<std::size_t>(order[r])]);
    classes_.push_back(decode(k, canon_.back(), kind));
  }
  for (auto& x : lookup_)
    if (x >= 0) x = remap[static_cast<std::size_t>(x)];
}

int IsoClassTable::classify(const Graph& g) const {
  if (g.order() != k_ || g.kind() != kind_) return -1;
  std::vector<int> verts(static_cast<std::size_t>(k_));
  std::iota(verts.begin(), verts.end(), 0);
  return classify_code(pair_code(g, verts.data(), k_));
}

int IsoClassTable::find(const std::string& canonical) const {
  auto it = std::find(canon_.begin(), canon_.end(), canonical);
  return it == canon_.end() ? -1 : static_cast<int>(it - canon_.begin());
}

IsoClassTable enumerate_oriented(int k) { return IsoClassTable(k, Kind::Oriented); }
IsoClassTable enumerate_undirected(int k) { return IsoClassTable(k, Kind::Undirected); }

const IsoClassTable& iso_table(int k, Kind kind) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<IsoClassTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, static_cast<int>(kind)}];
  if (!slot) slot = std::make_unique<IsoClassTable>(k, kind);
  return *slot;
}

}  // namespace flagcert
