#include "vf/primary.hpp"

namespace vf {

namespace {

// Layer index of -nu-2 in X = s-2N, if it is a natural number.
std::optional<unsigned> partnerLayer(const GaussianRational& sum, unsigned k) {
  // k' = s - k + 1 from  s - 2k' = -(s - 2k) - 2
  GaussianRational kp = sum - GaussianRational(static_cast<long>(k)) + GaussianRational(1);
  if (!kp.isNatural()) return std::nullopt;
  return static_cast<unsigned>(kp.re().get_num().get_ui());
}

}  // namespace

std::vector<CharacterOrbit> characterSupport(const TensorModuleSpec& spec) {
  std::vector<CharacterOrbit> orbits;
  GaussianRational sum = spec.weightSum();
  for (unsigned k = 0; k <= spec.cutoff; ++k) {
    CharacterOrbit orbit;
    orbit.nu = spec.layerWeight(k);
    orbit.partner = -orbit.nu - GaussianRational(2);
    orbit.k = k;
    if (auto kp = partnerLayer(sum, k)) {
      if (*kp < k) continue;  // character already recorded at the partner layer
      if (*kp != k) {         // kp == k is the self-paired nu = -1
        orbit.partnerInX = true;
        orbit.kPartner = *kp;
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Matrix generalizedEigenspace(const TensorModuleSpec& spec, unsigned k,
                             const GaussianRational& c) {
  Matrix shifted = casimirMatrix(spec, k).minusScalar(c);
  return powerKernel(shifted, k + 1);
}

Matrix singularVectors(const TensorModuleSpec& spec, unsigned k,
                       const std::optional<GaussianRational>& restrictToC) {
  if (k == 0) {
    // the highest-weight line; nothing to intersect away (layer 0 is a
    // one-dimensional Casimir eigenspace)
    Matrix top(1, 1);
    top.at(0, 0) = GaussianRational(1);
    if (restrictToC && *restrictToC != casimirEigenvalue(spec.weightSum()))
      return Matrix(1, 0);
    return top;
  }
  Matrix e = raisingMatrix(spec, k);
  if (!restrictToC) return nullspace(e);
  Matrix gen = generalizedEigenspace(spec, k, *restrictToC);
  return kernelIntersectColumnSpan(e, gen);
}

unsigned homDim(const GaussianRational& lam1, const GaussianRational& lam2,
                const GaussianRational& lam3, unsigned cutoff) {
  GaussianRational diff = lam3 - lam1 - lam2;
  if (!diff.isNatural()) return 0;
  if (mpz_even_p(diff.re().get_num().get_mpz_t()) == 0) return 0;
  unsigned ell = static_cast<unsigned>(mpz_class(diff.re().get_num() / 2).get_ui());
  if (ell > cutoff)
    throw InsufficientCutoffError("hom_dim: layer " + std::to_string(ell) +
                                      " beyond cutoff " + std::to_string(cutoff),
                                  ell);
  TensorModuleSpec spec{-lam1, -lam2, cutoff};
  Matrix basis = singularVectors(spec, ell, casimirEigenvalue(-lam3));
  return static_cast<unsigned>(basis.cols());
}

bool casimirIsSemisimpleOnComponent(const TensorModuleSpec& spec,
                                    const CharacterOrbit& orbit) {
  unsigned kMax = orbit.maxLayer();
  if (kMax > spec.cutoff)
    throw InsufficientCutoffError("casimir_is_semisimple: orbit layer beyond cutoff",
                                  kMax);
  GaussianRational c = casimirEigenvalue(orbit.nu);
  for (unsigned k = orbit.k; k <= kMax; ++k) {
    Matrix gen = generalizedEigenspace(spec, k, c);
    if (gen.cols() == 0) continue;
    Matrix shifted = casimirMatrix(spec, k).minusScalar(c);
    if (!(shifted * gen).isZero()) return false;
  }
  return true;
}

PrimaryComponentShape classifyComponent(const TensorModuleSpec& spec,
                                        const CharacterOrbit& orbit) {
  unsigned kMax = orbit.maxLayer();
  if (kMax > spec.cutoff)
    throw InsufficientCutoffError("classify_component: orbit layer beyond cutoff", kMax);

  GaussianRational c = casimirEigenvalue(orbit.nu);
  PrimaryComponentShape shape;
  bool semisimple = casimirIsSemisimpleOnComponent(spec, orbit);
  shape.evidence.casimirNilpotent = !semisimple;

  if (!orbit.partnerInX || orbit.isSelfPaired()) {
    shape.tag = ComponentTag::Verma;
    shape.nuLow = orbit.nu;
    shape.nuHigh = orbit.nu;
    shape.evidence.singularCountHigh =
        static_cast<unsigned>(singularVectors(spec, orbit.k, c).cols());
    shape.evidence.singularCountLow = shape.evidence.singularCountHigh;
  } else {
    // representative layer k is the high weight, the partner the low one
    shape.nuHigh = orbit.nu;
    shape.nuLow = orbit.partner;
    shape.evidence.singularCountHigh =
        static_cast<unsigned>(singularVectors(spec, orbit.k, c).cols());
    shape.evidence.singularCountLow =
        static_cast<unsigned>(singularVectors(spec, *orbit.kPartner, c).cols());
    switch (shape.evidence.singularCountLow) {
      case 2:
        shape.tag = ComponentTag::VermaPair;
        break;
      case 1:
        shape.tag = ComponentTag::ProjectiveCover;
        break;
      default:
        throw InternalInconsistencyError(
            "classify_component: singular count at the lower weight is " +
            std::to_string(shape.evidence.singularCountLow) + ", expected 1 or 2");
    }
  }

  if (semisimple == (shape.tag == ComponentTag::ProjectiveCover))
    throw InternalInconsistencyError(
        "classify_component: Casimir semisimplicity disagrees with the "
        "singular-vector count");
  return shape;
}

}  // namespace vf
