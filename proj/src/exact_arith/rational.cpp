#include "flagcert/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace flagcert {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Rational parse_decimal(std::string_view text) {
  std::string s(text);
  std::string mantissa = s;
  long exponent = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mantissa = s.substr(0, e);
    std::size_t used = 0;
    exponent = std::stol(s.substr(e + 1), &used);
    if (used != s.size() - e - 1) throw std::invalid_argument("bad exponent in '" + s + "'");
  }
  auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mpz_class digits;
  if (mantissa.empty() || mantissa == "-" || mantissa == "+" || digits.set_str(mantissa, 10) != 0)
    throw std::invalid_argument("not a number: '" + s + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    return Rational(z);
  }
  std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  mpz_class p, q;
  if (p.set_str(num, 10) != 0 || q.set_str(den, 10) != 0)
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational snap_to_denominator(double x, long den) {
  if (!std::isfinite(x)) throw std::invalid_argument("snap_to_denominator: non-finite value");
  Rational exact(x);
  exact *= den;
  // round half away from zero
  mpz_class num = exact.get_num(), d = exact.get_den();
  mpz_class twice = 2 * num + (sgn(num) >= 0 ? d : mpz_class(-d));
  mpz_class k;
  mpz_tdiv_q(k.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * d).get_mpz_t());
  Rational r(k, den);
  r.canonicalize();
  return r;
}

Rational best_approximation(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("best_approximation: non-finite value");
  if (max_den < 1) throw std::invalid_argument("best_approximation: max_den < 1");
  Rational target(x);
  // continued fraction convergents h/k, with a final semiconvergent check
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational rem = target;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    mpz_class k2 = a * k1 + k0;
    if (k2 > max_den) {
      mpz_class t = (mpz_class(max_den) - k0) / k1;
      Rational semi(t * h1 + h0, t * k1 + k0), conv(h1, k1);
      semi.canonicalize();
      conv.canonicalize();
      Rational ds = abs(semi - target), dc = abs(conv - target);
      return ds < dc ? semi : conv;
    }
    mpz_class h2 = a * h1 + h0;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Rational frac = rem - Rational(a);
    if (sgn(frac) == 0) break;
    rem = 1 / frac;
  }
  Rational r(h1, k1);
  r.canonicalize();
  return r;
}

}  // namespace flagcert
