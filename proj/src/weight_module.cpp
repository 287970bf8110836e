#include "vf/weight_module.hpp"

namespace vf {

namespace {

void checkLayer(const TensorModuleSpec& spec, unsigned k, const char* what) {
  if (k > spec.cutoff)
    throw RangeError(std::string(what) + ": layer " + std::to_string(k) +
                     " exceeds cutoff " + std::to_string(spec.cutoff));
}

// e . f^a v = a(mu - a + 1) f^{a-1} v
GaussianRational raisingCoefficient(const GaussianRational& mu, unsigned a) {
  GaussianRational aa(static_cast<long>(a));
  return aa * (mu - aa + GaussianRational(1));
}

}  // namespace

TensorLayer layerBasis(const TensorModuleSpec& spec, unsigned k) {
  checkLayer(spec, k, "layer_basis");
  TensorLayer layer;
  layer.k = k;
  layer.weight = spec.layerWeight(k);
  layer.basis.reserve(k + 1);
  for (unsigned a = 0; a <= k; ++a) layer.basis.emplace_back(a, k - a);
  return layer;
}

Matrix raisingMatrix(const TensorModuleSpec& spec, unsigned k) {
  if (k == 0) throw RangeError("raising_matrix: layer 0 has no target layer");
  checkLayer(spec, k, "raising_matrix");
  Matrix m(k, k + 1);
  // source column a is (a, k-a); target row a' is (a', k-1-a')
  for (unsigned a = 0; a <= k; ++a) {
    unsigned b = k - a;
    if (a > 0) m.at(a - 1, a) += raisingCoefficient(spec.mu1, a);
    if (b > 0) m.at(a, a) += raisingCoefficient(spec.mu2, b);
  }
  return m;
}

Matrix loweringMatrix(const TensorModuleSpec& spec, unsigned k) {
  checkLayer(spec, k + 1, "lowering_matrix");
  Matrix m(k + 2, k + 1);
  for (unsigned a = 0; a <= k; ++a) {
    m.at(a + 1, a) += GaussianRational(1);  // f on the first factor
    m.at(a, a) += GaussianRational(1);      // f on the second factor
  }
  return m;
}

GaussianRational cartanValue(const TensorModuleSpec& spec, unsigned k) {
  checkLayer(spec, k, "cartan_value");
  return spec.layerWeight(k);
}

Matrix casimirMatrix(const TensorModuleSpec& spec, unsigned k) {
  checkLayer(spec, k, "casimir_matrix");
  GaussianRational lam = spec.layerWeight(k);
  GaussianRational diag = lam + lam * lam / GaussianRational(2);
  Matrix c(k + 1, k + 1);
  if (k > 0)
    c = (loweringMatrix(spec, k - 1) * raisingMatrix(spec, k)).scaled(GaussianRational(2));
  for (unsigned i = 0; i <= k; ++i) c.at(i, i) += diag;
  return c;
}

GaussianRational casimirEigenvalue(const GaussianRational& nu) {
  return nu * (nu + GaussianRational(2)) / GaussianRational(2);
}

}  // namespace vf
