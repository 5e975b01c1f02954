#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagcert {

// gmpxx keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;

// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& q);

// Accepts "p/q", "p", and plain decimals such as "-0.25" or "1e-3".
Rational parse_rational(std::string_view text);

// p/q in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational binomial(long n, long k);

// Nearest fraction k/den to x (ties away from zero).
Rational snap_to_denominator(double x, long den);

// Best rational approximation of x with denominator at most max_den.
Rational best_approximation(double x, long max_den);

}  // namespace flagcert
