#ifndef VF_PRIMARY_HPP
#define VF_PRIMARY_HPP

#include <optional>
#include <vector>

#include "vf/weight_module.hpp"

namespace vf {

class InsufficientCutoffError : public std::runtime_error {
public:
  InsufficientCutoffError(const std::string& what, unsigned needed)
      : std::runtime_error(what + " (needed cutoff " + std::to_string(needed) + ")"),
        needed_(needed) {}
  unsigned neededCutoff() const { return needed_; }

private:
  unsigned needed_;
};

class InternalInconsistencyError : public std::logic_error {
public:
  explicit InternalInconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

/// One infinitesimal character occurring in the truncated tensor product.
/// `nu` is the representative with the smaller layer index; when the Weyl
/// partner -nu-2 also lies in X = mu1+mu2-2N, both layers are recorded.
struct CharacterOrbit {
  GaussianRational nu;
  GaussianRational partner;  // -nu-2
  bool partnerInX = false;
  unsigned k = 0;
  std::optional<unsigned> kPartner;

  bool isSelfPaired() const { return nu == partner; }  // nu == -1
  unsigned maxLayer() const { return kPartner ? *kPartner : k; }
};

enum class ComponentTag { Verma, VermaPair, ProjectiveCover };

/// Isomorphism type of one primary component, with the raw linear-algebra
/// evidence it was decided from.
struct PrimaryComponentShape {
  ComponentTag tag = ComponentTag::Verma;
  GaussianRational nuLow;   // Verma: the class itself; pair/cover: lower weight
  GaussianRational nuHigh;  // pair/cover only: -nuLow-2
  struct Evidence {
    unsigned singularCountLow = 0;
    unsigned singularCountHigh = 0;
    bool casimirNilpotent = false;
  } evidence;
};

// One orbit per distinct infinitesimal character among the layers k <= cutoff,
// ordered by representative layer.
std::vector<CharacterOrbit> characterSupport(const TensorModuleSpec& spec);

// Exact basis of ker (C|_k - c)^(k+1), as columns.  The chain of kernels of
// powers stabilizes well before exponent k+1; the stabilized kernel is
// returned (it equals ker of the full power).
Matrix generalizedEigenspace(const TensorModuleSpec& spec, unsigned k,
                             const GaussianRational& c);

// Basis of ker(raising e) at layer k, optionally intersected with the
// generalized eigenspace for Casimir value c.
Matrix singularVectors(const TensorModuleSpec& spec, unsigned k,
                       const std::optional<GaussianRational>& restrictToC = std::nullopt);

// dim Hom(M(-lam3), M(-lam1) (x) M(-lam2)).  0 when lam3-lam1-lam2 is not in
// 2N; throws InsufficientCutoffError when the layer exceeds the cutoff.
unsigned homDim(const GaussianRational& lam1, const GaussianRational& lam2,
                const GaussianRational& lam3, unsigned cutoff);

// True iff C - c vanishes on the generalized eigenspace at every layer
// covering the orbit (k .. maxLayer).
bool casimirIsSemisimpleOnComponent(const TensorModuleSpec& spec,
                                    const CharacterOrbit& orbit);

// Brute-force classification of the primary component at `orbit`.
PrimaryComponentShape classifyComponent(const TensorModuleSpec& spec,
                                        const CharacterOrbit& orbit);

}  // namespace vf

#endif
