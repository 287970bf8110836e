#ifndef VF_RANKIN_COHEN_HPP
#define VF_RANKIN_COHEN_HPP

#include <optional>
#include <vector>

#include "vf/scalar.hpp"

namespace vf {

/// Dense univariate polynomial over Q(i), coefficients ascending, trailing
/// zeros trimmed.  The zero polynomial has an empty coefficient vector.
class Poly1 {
public:
  Poly1() = default;
  explicit Poly1(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  // -1 stands for the degree of the zero polynomial
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Poly1 derivative() const;
  Poly1 operator+(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 scaled(const GaussianRational& s) const;
  bool operator==(const Poly1& o) const { return coeffs_ == o.coeffs_; }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
  }
  std::vector<GaussianRational> coeffs_;
};

/// Rankin-Cohen bracket of degree ell:
///   coeffs[j] = (-1)^j (lam1+ell-1)_j (lam2+ell-1)_{ell-j} / (j!(ell-j)!)
struct RCOperator {
  GaussianRational lam1;
  GaussianRational lam2;
  unsigned ell = 0;
  std::vector<GaussianRational> coeffs;  // length ell + 1
  GaussianRational lam3;                 // lam1 + lam2 + 2*ell

  bool isZero() const {
    for (const auto& c : coeffs)
      if (!c.isZero()) return false;
    return true;
  }
};

RCOperator rcCoefficients(const GaussianRational& lam1, const GaussianRational& lam2,
                          unsigned ell);

// sum_j coeffs[j] f^{(ell-j)} g^{(j)}, exact.
Poly1 rcApply(const RCOperator& op, const Poly1& f, const Poly1& g);

// True iff the bracket for (lam1, lam2, lam3) vanishes identically.
// Throws PreconditionError unless lam3 - lam1 - lam2 is in 2N.
bool rcIsZero(const GaussianRational& lam1, const GaussianRational& lam2,
              const GaussianRational& lam3);

// The bracket degree (lam3 - lam1 - lam2)/2 when it is in N.
std::optional<unsigned> rcDegree(const GaussianRational& lam1,
                                 const GaussianRational& lam2,
                                 const GaussianRational& lam3);

}  // namespace vf

#endif
