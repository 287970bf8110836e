#ifndef VF_WEIGHT_MODULE_HPP
#define VF_WEIGHT_MODULE_HPP

#include <utility>
#include <vector>

#include "vf/linalg.hpp"
#include "vf/scalar.hpp"

namespace vf {

class RangeError : public std::out_of_range {
public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Truncation of M(mu1) (x) M(mu2): weight layers k = 0..cutoff are
/// retained, layer k carrying weight mu1 + mu2 - 2k.
struct TensorModuleSpec {
  GaussianRational mu1;
  GaussianRational mu2;
  unsigned cutoff = 0;

  GaussianRational weightSum() const { return mu1 + mu2; }
  GaussianRational layerWeight(unsigned k) const {
    return mu1 + mu2 - GaussianRational(2 * static_cast<long>(k));
  }
};

/// One weight layer.  Basis vectors are f^a v' (x) f^b v'' with a + b = k,
/// ordered by ascending a; dim = k + 1.
struct TensorLayer {
  unsigned k = 0;
  std::vector<std::pair<unsigned, unsigned>> basis;
  GaussianRational weight;
};

TensorLayer layerBasis(const TensorModuleSpec& spec, unsigned k);

// Action of e: layer k -> layer k-1 via e(x(x)y) = ex(x)y + x(x)ey with the
// single-factor rule e.f^a v = a(mu - a + 1) f^{a-1} v.  Shape k x (k+1).
// Requires 1 <= k <= cutoff.
Matrix raisingMatrix(const TensorModuleSpec& spec, unsigned k);

// Action of f: layer k -> layer k+1 (coproduct, unit coefficients).
// Shape (k+2) x (k+1).  Requires k + 1 <= cutoff.
Matrix loweringMatrix(const TensorModuleSpec& spec, unsigned k);

// Scalar by which h acts on layer k: mu1 + mu2 - 2k.
GaussianRational cartanValue(const TensorModuleSpec& spec, unsigned k);

// Casimir C = ef + fe + h^2/2 on layer k, realized as
// 2 F_{k-1->k} E_{k->k-1} + (lam + lam^2/2) Id so only layers <= k are
// touched.  Square (k+1) x (k+1).
Matrix casimirMatrix(const TensorModuleSpec& spec, unsigned k);

// Casimir eigenvalue on a highest-weight vector of weight nu:
// c(nu) = nu(nu+2)/2; satisfies c(nu) = c(-nu-2).
GaussianRational casimirEigenvalue(const GaussianRational& nu);

}  // namespace vf

#endif
