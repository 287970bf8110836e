#include "vf/rankin_cohen.hpp"

#include <optional>

namespace vf {

Poly1 Poly1::derivative() const {
  if (coeffs_.size() <= 1) return Poly1();
  std::vector<GaussianRational> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n)
    d[n - 1] = coeffs_[n] * GaussianRational(static_cast<long>(n));
  return Poly1(std::move(d));
}

Poly1 Poly1::operator+(const Poly1& o) const {
  std::vector<GaussianRational> s(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (n < coeffs_.size()) s[n] += coeffs_[n];
    if (n < o.coeffs_.size()) s[n] += o.coeffs_[n];
  }
  return Poly1(std::move(s));
}

Poly1 Poly1::operator*(const Poly1& o) const {
  if (isZero() || o.isZero()) return Poly1();
  std::vector<GaussianRational> p(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t m = 0; m < coeffs_.size(); ++m)
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n)
      p[m + n] += coeffs_[m] * o.coeffs_[n];
  return Poly1(std::move(p));
}

Poly1 Poly1::scaled(const GaussianRational& s) const {
  std::vector<GaussianRational> p(coeffs_.size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = coeffs_[n] * s;
  return Poly1(std::move(p));
}

namespace {

GaussianRational factorial(unsigned n) {
  GaussianRational f(1);
  for (unsigned j = 2; j <= n; ++j) f *= GaussianRational(static_cast<long>(j));
  return f;
}

}  // namespace

RCOperator rcCoefficients(const GaussianRational& lam1, const GaussianRational& lam2,
                          unsigned ell) {
  RCOperator op;
  op.lam1 = lam1;
  op.lam2 = lam2;
  op.ell = ell;
  op.lam3 = lam1 + lam2 + GaussianRational(2 * static_cast<long>(ell));
  op.coeffs.resize(ell + 1);
  GaussianRational x1 = lam1 + GaussianRational(static_cast<long>(ell)) - GaussianRational(1);
  GaussianRational x2 = lam2 + GaussianRational(static_cast<long>(ell)) - GaussianRational(1);
  for (unsigned j = 0; j <= ell; ++j) {
    GaussianRational c = descendingFactorial(x1, j) * descendingFactorial(x2, ell - j) /
                         (factorial(j) * factorial(ell - j));
    if (j % 2 == 1) c = -c;
    op.coeffs[j] = c;
  }
  return op;
}

Poly1 rcApply(const RCOperator& op, const Poly1& f, const Poly1& g) {
  // the j-th term needs f^{(ell-j)} and g^{(j)}
  std::vector<Poly1> fd(op.ell + 1), gd(op.ell + 1);
  fd[0] = f;
  gd[0] = g;
  for (unsigned n = 1; n <= op.ell; ++n) {
    fd[n] = fd[n - 1].derivative();
    gd[n] = gd[n - 1].derivative();
  }
  Poly1 result;
  for (unsigned j = 0; j <= op.ell; ++j) {
    if (op.coeffs[j].isZero()) continue;
    result = result + (fd[op.ell - j] * gd[j]).scaled(op.coeffs[j]);
  }
  return result;
}

std::optional<unsigned> rcDegree(const GaussianRational& lam1,
                                 const GaussianRational& lam2,
                                 const GaussianRational& lam3) {
  GaussianRational diff = lam3 - lam1 - lam2;
  if (!diff.isNatural()) return std::nullopt;
  if (mpz_even_p(diff.re().get_num().get_mpz_t()) == 0) return std::nullopt;
  return static_cast<unsigned>(mpz_class(diff.re().get_num() / 2).get_ui());
}

bool rcIsZero(const GaussianRational& lam1, const GaussianRational& lam2,
              const GaussianRational& lam3) {
  auto ell = rcDegree(lam1, lam2, lam3);
  if (!ell)
    throw PreconditionError("rc_is_zero: lam3 - lam1 - lam2 must lie in 2N");
  return rcCoefficients(lam1, lam2, *ell).isZero();
}

}  // namespace vf
