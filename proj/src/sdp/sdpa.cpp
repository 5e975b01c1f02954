#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "flagcert/sdp.hpp"

namespace flagcert {

namespace {

std::string fmt(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// Tokens of the non-comment lines, with SDPA punctuation treated as blanks.
std::vector<std::vector<std::string>> tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && (line[0] == '"' || line[0] == '*')) continue;
    for (char& ch : line)
      if (ch == '{' || ch == '}' || ch == '(' || ch == ')' || ch == ',' || ch == '=') ch = ' ';
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

double to_double(const std::string& s) {
  double v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw std::runtime_error("sdpa: bad number '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw std::runtime_error("sdpa: bad integer '" + s + "'");
  return v;
}

class TokenStream {
 public:
  TokenStream(std::vector<std::vector<std::string>> lines, std::size_t first_line) {
    for (std::size_t l = first_line; l < lines.size(); ++l)
      for (auto& t : lines[l]) toks_.push_back(std::move(t));
  }
  bool done() const { return pos_ >= toks_.size(); }
  std::size_t remaining() const { return toks_.size() - pos_; }
  const std::string& next() {
    if (done()) throw std::runtime_error("sdpa: unexpected end of input");
    return toks_[pos_++];
  }

 private:
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

void check_index(const SdpaData& d, int blk, int i, int j) {
  if (blk < 1 || blk > static_cast<int>(d.block_sizes.size())) throw std::runtime_error("sdpa: block index out of range");
  const int size = d.block_sizes[static_cast<std::size_t>(blk - 1)];
  const int n = std::abs(size);
  if (i < 1 || j < 1 || i > n || j > n) throw std::runtime_error("sdpa: entry index out of range");
  if (size < 0 && i != j) throw std::runtime_error("sdpa: off-diagonal entry in a diagonal block");
}

}  // namespace

std::string write_sdpa(const SdpaData& d) {
  std::ostringstream os;
  os << "* density SDP: y = class weights, last block = slacks and alpha\n";
  os << d.mdim << " = mDIM\n";
  os << d.block_sizes.size() << " = nBLOCK\n";
  for (std::size_t b = 0; b < d.block_sizes.size(); ++b) os << (b ? " " : "") << d.block_sizes[b];
  os << "\n";
  for (std::size_t i = 0; i < d.objective.size(); ++i) os << (i ? " " : "") << fmt(d.objective[i]);
  os << "\n";
  for (const auto& e : d.entries) {
    if (e.value == 0.0) continue;
    os << e.mat << " " << e.block << " " << e.i << " " << e.j << " " << fmt(e.value) << "\n";
  }
  return os.str();
}

SdpaData read_sdpa(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.size() < 2) throw std::runtime_error("sdpa: missing header");
  SdpaData d;
  d.mdim = to_int(lines[0][0]);
  const int nblock = to_int(lines[1][0]);
  if (d.mdim < 1 || nblock < 1) throw std::runtime_error("sdpa: bad dimensions");
  TokenStream ts(std::move(lines), 2);
  for (int b = 0; b < nblock; ++b) {
    int s = to_int(ts.next());
    if (s == 0) throw std::runtime_error("sdpa: zero block size");
    d.block_sizes.push_back(s);
  }
  for (int i = 0; i < d.mdim; ++i) d.objective.push_back(to_double(ts.next()));
  if (ts.remaining() % 5 != 0) throw std::runtime_error("sdpa: truncated entry");
  while (!ts.done()) {
    SdpaData::Entry e{};
    e.mat = to_int(ts.next());
    e.block = to_int(ts.next());
    e.i = to_int(ts.next());
    e.j = to_int(ts.next());
    e.value = to_double(ts.next());
    if (e.mat < 0 || e.mat > d.mdim) throw std::runtime_error("sdpa: matrix index out of range");
    check_index(d, e.block, e.i, e.j);
    if (e.i > e.j) std::swap(e.i, e.j);
    d.entries.push_back(e);
  }
  return d;
}

std::vector<double> certificate_slacks(const SdpaData& d, const BlockSymMatrix<double>& q, double alpha) {
  std::vector<double> s(d.objective.begin(), d.objective.end());
  for (auto& x : s) x -= alpha;
  for (const auto& e : d.entries) {
    if (e.mat == 0 || e.block > static_cast<int>(q.size())) continue;
    double x = q.block(static_cast<std::size_t>(e.block - 1)).matrix(e.i - 1, e.j - 1);
    s[static_cast<std::size_t>(e.mat - 1)] -= e.value * x * (e.i == e.j ? 1.0 : 2.0);
  }
  return s;
}

std::string write_solution(const FloatSolution& sol, const SdpaData& d) {
  if (static_cast<int>(sol.p.size()) != d.mdim) throw std::invalid_argument("write_solution: y has the wrong length");
  std::ostringstream os;
  for (std::size_t i = 0; i < sol.p.size(); ++i) os << (i ? " " : "") << fmt(sol.p[i]);
  os << "\n";
  // Z = Σ y_i F_i − F_0, accumulated per block
  std::vector<std::vector<double>> z;
  for (int s : d.block_sizes) z.emplace_back(static_cast<std::size_t>(s * s), 0.0);
  for (const auto& e : d.entries) {
    const int n = std::abs(d.block_sizes[static_cast<std::size_t>(e.block - 1)]);
    const double w = e.mat == 0 ? -1.0 : sol.p[static_cast<std::size_t>(e.mat - 1)];
    z[static_cast<std::size_t>(e.block - 1)][static_cast<std::size_t>((e.i - 1) * n + (e.j - 1))] += w * e.value;
  }
  for (std::size_t b = 0; b < d.block_sizes.size(); ++b) {
    const int n = std::abs(d.block_sizes[b]);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = z[b][static_cast<std::size_t>(i * n + j)];
        if (v != 0.0) os << "1 " << b + 1 << " " << i + 1 << " " << j + 1 << " " << fmt(v) << "\n";
      }
  }
  for (std::size_t b = 0; b < sol.Q.size(); ++b) {
    const auto& m = sol.Q.block(b).matrix;
    for (int i = 0; i < m.order(); ++i)
      for (int j = i; j < m.order(); ++j)
        if (m(i, j) != 0.0) os << "2 " << b + 1 << " " << i + 1 << " " << j + 1 << " " << fmt(m(i, j)) << "\n";
  }
  const std::size_t lp = sol.Q.size() + 1;
  for (std::size_t i = 0; i < sol.slack.size(); ++i)
    if (sol.slack[i] != 0.0) os << "2 " << lp << " " << i + 1 << " " << i + 1 << " " << fmt(sol.slack[i]) << "\n";
  os << "2 " << lp << " " << d.mdim + 1 << " " << d.mdim + 1 << " " << fmt(sol.alpha) << "\n";
  return os.str();
}

FloatSolution read_solution(std::string_view text, const SdpaData& d,
                            const std::vector<std::pair<std::string, int>>& shape) {
  if (shape.size() + 1 != d.block_sizes.size()) throw std::runtime_error("solution: shape does not match the problem");
  for (std::size_t b = 0; b < shape.size(); ++b)
    if (shape[b].second != d.block_sizes[b]) throw std::runtime_error("solution: block size mismatch");
  TokenStream ts(tokenize(text), 0);
  FloatSolution sol;
  for (int i = 0; i < d.mdim; ++i) sol.p.push_back(to_double(ts.next()));
  sol.Q = BlockSymMatrix<double>::zeros(shape);
  if (ts.remaining() % 5 != 0) throw std::runtime_error("solution: truncated entry");
  while (!ts.done()) {
    const int which = to_int(ts.next());
    const int blk = to_int(ts.next());
    int i = to_int(ts.next()), j = to_int(ts.next());
    const double v = to_double(ts.next());
    if (which != 1 && which != 2) throw std::runtime_error("solution: entry must belong to Z (1) or X (2)");
    check_index(d, blk, i, j);
    if (which == 1) continue;
    if (blk <= static_cast<int>(shape.size())) {
      sol.Q.block(static_cast<std::size_t>(blk - 1)).matrix.set(i - 1, j - 1, v);
    } else if (i == d.mdim + 1) {
      sol.alpha = v;
    }
  }
  sol.slack = certificate_slacks(d, sol.Q, sol.alpha);
  sol.converged = true;
  sol.status = "imported";
  return sol;
}

}  // namespace flagcert
