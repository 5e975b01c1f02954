#pragma once

#include <array>
#include <optional>
#include <string>

#include "flagcert/rational.hpp"

namespace flagcert {

// Element a + b√2 + c√3 + d√6 of Q(√2,√3).
class QuadExt {
 public:
  QuadExt() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
  QuadExt(const Rational& a) : c_{a, Rational(0), Rational(0), Rational(0)} {}  // NOLINT
  QuadExt(long a) : QuadExt(Rational(a)) {}                                      // NOLINT
  QuadExt(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
      : c_{a, b, c, d} {}

  static QuadExt sqrt2() { return {0, 1, 0, 0}; }
  static QuadExt sqrt3() { return {0, 0, 1, 0}; }
  static QuadExt sqrt6() { return {0, 0, 0, 1}; }

  // coordinates in the basis {1, √2, √3, √6}
  const Rational& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Rational& a() const { return c_[0]; }
  const Rational& b() const { return c_[1]; }
  const Rational& c() const { return c_[2]; }
  const Rational& d() const { return c_[3]; }

  bool is_zero() const;
  bool is_rational() const;
  double to_double() const;

  QuadExt inverse() const;  // throws std::domain_error on zero

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator*=(const Rational& q);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator*(QuadExt x, const Rational& q) { return x *= q; }
  friend QuadExt operator*(const Rational& q, QuadExt x) { return x *= q; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  QuadExt operator-() const;

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.c_ == y.c_; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  std::string to_string() const;

 private:
  std::array<Rational, 4> c_;
};

// Exact sign of the real number represented by x.
int quad_sign(const QuadExt& x);

inline int sign_of(const QuadExt& x) { return quad_sign(x); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

// √q inside Q(√2,√3) for rational q ≥ 0, if it exists there.
std::optional<QuadExt> field_sqrt(const Rational& q);

}  // namespace flagcert
