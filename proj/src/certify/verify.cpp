#include <stdexcept>

#include "flagcert/certify.hpp"
#include "flagcert/linalg.hpp"

namespace flagcert {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::RoundedFromSolver: return "rounded-from-solver";
    case Provenance::PaperData: return "paper-data";
    case Provenance::Handcrafted: return "handcrafted";
  }
  return "handcrafted";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "rounded-from-solver") return Provenance::RoundedFromSolver;
  if (s == "paper-data") return Provenance::PaperData;
  if (s == "handcrafted") return Provenance::Handcrafted;
  throw std::runtime_error("unknown provenance '" + s + "'");
}

template <class T>
VerificationReport verify(const Certificate<T>& cert, const SdpProblem& problem) {
  if (cert.Q.shape() != problem.shape) throw std::invalid_argument("verify: certificate shape does not match the family");
  VerificationReport r;
  r.psd_ok = true;
  r.pd = true;
  for (const auto& b : cert.Q.blocks()) {
    LdltResult<T> l = ldlt_psd(b.matrix);
    r.psd_ok = r.psd_ok && l.psd;
    r.kernel_dim.push_back(b.matrix.order() - l.rank);
    r.pd = r.pd && l.psd && l.rank == b.matrix.order();
  }
  for (int i = 0; i < problem.m(); ++i) {
    const auto& a = problem.A[static_cast<std::size_t>(i)];
    QuadExt s = QuadExt(Rational(problem.c[static_cast<std::size_t>(i)] - cert.alpha)) - QuadExt(frobenius<T>(cert.Q, a));
    int sign = sign_of(s);
    if (sign == 0) r.equality.push_back(i);
    if (sign < 0) ++r.negative_slacks;
    r.slack.push_back(std::move(s));
  }
  return r;
}

template VerificationReport verify(const Certificate<Rational>&, const SdpProblem&);
template VerificationReport verify(const Certificate<QuadExt>&, const SdpProblem&);

}  // namespace flagcert
