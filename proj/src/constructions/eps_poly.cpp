#include <sstream>
#include <stdexcept>

#include "flagcert/constructions.hpp"

namespace flagcert {

EpsPolynomial::EpsPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EpsPolynomial EpsPolynomial::constant(const Rational& c) { return EpsPolynomial({c}); }
EpsPolynomial EpsPolynomial::eps() { return EpsPolynomial({Rational(0), Rational(1)}); }
EpsPolynomial EpsPolynomial::one_minus_eps() { return EpsPolynomial({Rational(1), Rational(-1)}); }

void EpsPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational EpsPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

int EpsPolynomial::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i])) return static_cast<int>(i);
  return -1;
}

Rational EpsPolynomial::eval(const Rational& e) const {
  Rational r(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * e + *it;
  return r;
}

EpsPolynomial& EpsPolynomial::operator+=(const EpsPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return EpsPolynomial(std::move(c));
}

EpsPolynomial operator*(const Rational& s, const EpsPolynomial& p) {
  std::vector<Rational> c(p.coeffs_);
  for (auto& x : c) x *= s;
  return EpsPolynomial(std::move(c));
}

EpsPolynomial pow(const EpsPolynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  EpsPolynomial r = EpsPolynomial::constant(Rational(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string EpsPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "·ε";
    if (i > 1) os << "·ε^" << i;
  }
  return os.str();
}

std::vector<EpsPolynomial> expected_densities_Bn_eps(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("expected_densities_Bn_eps: k must be in 1..4");
  const IsoClassTable& t = iso_table(k);
  std::vector<EpsPolynomial> out(static_cast<std::size_t>(t.size()));
  int total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  const Rational w(1, total);
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < k; ++i, c /= 3) parts[static_cast<std::size_t>(i)] = c % 3;
    const Graph pattern = pattern_graph(parts);
    const auto arcs = pattern.edges();
    const int s = static_cast<int>(arcs.size());
    for (int mask = 0; mask < (1 << s); ++mask) {
      Graph g = pattern;
      int deleted = 0;
      for (int a = 0; a < s; ++a)
        if (mask >> a & 1) {
          g.remove_edge(arcs[static_cast<std::size_t>(a)].first, arcs[static_cast<std::size_t>(a)].second);
          ++deleted;
        }
      EpsPolynomial term = w * (pow(EpsPolynomial::eps(), deleted) * pow(EpsPolynomial::one_minus_eps(), s - deleted));
      out[static_cast<std::size_t>(t.classify(g))] += term;
    }
  }
  return out;
}

}  // namespace flagcert
