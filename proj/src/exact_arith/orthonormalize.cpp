#include <stdexcept>

#include "flagcert/linalg.hpp"

namespace flagcert {

std::vector<Vec<QuadExt>> orthonormalize(const std::vector<Vec<Rational>>& vectors, NormPolicy policy) {
  // Orthogonalize over Q first; every squared norm is then rational.
  std::vector<Vec<Rational>> ortho;
  std::vector<Rational> norms2;
  for (const auto& v : vectors) {
    Vec<Rational> w = v;
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      Rational coef = dot(v, ortho[k]) / norms2[k];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coef * ortho[k][i];
    }
    Rational n2 = dot(w, w);
    if (sgn(n2) == 0) throw std::invalid_argument("orthonormalize: input vectors are linearly dependent");
    ortho.push_back(std::move(w));
    norms2.push_back(n2);
  }
  std::vector<Vec<QuadExt>> out;
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    std::optional<QuadExt> norm = field_sqrt(norms2[k]);
    Vec<QuadExt> u;
    if (norm) {
      QuadExt inv = norm->inverse();
      for (const auto& x : ortho[k]) u.push_back(inv * x);
    } else if (policy == NormPolicy::ScaleToSquarefree) {
      // n2 = a/b; a·b = s·t² with s squarefree; divide by t/b so that |w|² = s
      mpz_class ab = norms2[k].get_num() * norms2[k].get_den();
      mpz_class s = 1, t = 1, rest = ab;
      for (unsigned long p = 2; mpz_class(p) * p <= rest; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
          rest /= p;
          ++e;
        }
        if (e % 2) s *= p;
        for (unsigned i = 0; i < e / 2; ++i) t *= p;
      }
      s *= rest;
      Rational scale(norms2[k].get_den(), t);
      scale.canonicalize();
      for (const auto& x : ortho[k]) u.push_back(QuadExt(Rational(x * scale)));
    } else {
      throw std::domain_error("orthonormalize: field overflow (norm² = " + to_string(norms2[k]) +
                              " has no square root in Q(√2,√3))");
    }
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace flagcert
