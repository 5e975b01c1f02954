#include "flagcert/quad_ext.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace flagcert {

bool QuadExt::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QuadExt::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

double QuadExt::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(3.0) +
         c_[3].get_d() * std::sqrt(6.0);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const auto& [a, b, c, d] = c_;
  const auto& [e, f, g, h] = o.c_;
  Rational r0 = a * e + 2 * b * f + 3 * c * g + 6 * d * h;
  Rational r1 = a * f + b * e + 3 * (c * h + d * g);
  Rational r2 = a * g + c * e + 2 * (b * h + d * f);
  Rational r3 = a * h + d * e + b * g + c * f;
  c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  return *this;
}

QuadExt QuadExt::operator-() const {
  return QuadExt(-c_[0], -c_[1], -c_[2], -c_[3]);
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("QuadExt: division by zero");
  // x = u + v√3 with u, v in Q(√2); x⁻¹ = (u − v√3) / (u² − 3v²)
  QuadExt conj3(c_[0], c_[1], -c_[2], -c_[3]);
  QuadExt n = *this * conj3;  // lies in Q(√2)
  // n = p + q√2; n⁻¹ = (p − q√2) / (p² − 2q²)
  Rational norm = n.a() * n.a() - 2 * n.b() * n.b();
  QuadExt n_inv(n.a() / norm, -n.b() / norm, 0, 0);
  return conj3 * n_inv;
}

std::string QuadExt::to_string() const {
  return flagcert::to_string(c_[0]) + " + " + flagcert::to_string(c_[1]) + "*sqrt2 + " +
         flagcert::to_string(c_[2]) + "*sqrt3 + " + flagcert::to_string(c_[3]) + "*sqrt6";
}

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// Encloses x in [lo, hi] at the given precision; returns the sign when the
// enclosure excludes zero, and 0 when it does not.
int interval_sign(const QuadExt& x, mpfr_prec_t prec) {
  static const unsigned long radicand[4] = {1, 2, 3, 6};
  Mpfr lo(prec), hi(prec), q_lo(prec), q_hi(prec), r_lo(prec), r_hi(prec), t(prec);
  mpfr_set_zero(lo.v, 1);
  mpfr_set_zero(hi.v, 1);
  for (int i = 0; i < 4; ++i) {
    const Rational& q = x.coord(i);
    if (sgn(q) == 0) continue;
    mpfr_set_q(q_lo.v, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(q_hi.v, q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt_ui(r_lo.v, radicand[i], MPFR_RNDD);
    mpfr_sqrt_ui(r_hi.v, radicand[i], MPFR_RNDU);
    if (sgn(q) > 0) {
      mpfr_mul(t.v, q_lo.v, r_lo.v, MPFR_RNDD);
      mpfr_add(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, q_hi.v, r_hi.v, MPFR_RNDU);
      mpfr_add(hi.v, hi.v, t.v, MPFR_RNDU);
    } else {
      mpfr_mul(t.v, q_lo.v, r_hi.v, MPFR_RNDD);
      mpfr_add(lo.v, lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, q_hi.v, r_lo.v, MPFR_RNDU);
      mpfr_add(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  }
  if (mpfr_sgn(lo.v) > 0) return 1;
  if (mpfr_sgn(hi.v) < 0) return -1;
  return 0;
}

}  // namespace

int quad_sign(const QuadExt& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.a());
  // a nonzero element is a nonzero real, so the loop terminates
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    int s = interval_sign(x, prec);
    if (s != 0) return s;
  }
}

std::optional<QuadExt> field_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return QuadExt();
  // √(p/r) = √(p·r)/r and p·r must be s·t² with s in {1,2,3,6}
  mpz_class pr = q.get_num() * q.get_den();
  static const int radicands[4] = {1, 2, 3, 6};
  for (int i = 0; i < 4; ++i) {
    const int s = radicands[i];
    if (!mpz_divisible_ui_p(pr.get_mpz_t(), static_cast<unsigned long>(s))) continue;
    mpz_class rest = pr / s;
    if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), rest.get_mpz_t());
    Rational coeff(t, q.get_den());
    coeff.canonicalize();
    QuadExt out;
    Rational zero(0);
    switch (i) {
      case 0: out = QuadExt(coeff, zero, zero, zero); break;
      case 1: out = QuadExt(zero, coeff, zero, zero); break;
      case 2: out = QuadExt(zero, zero, coeff, zero); break;
      default: out = QuadExt(zero, zero, zero, coeff); break;
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace flagcert
