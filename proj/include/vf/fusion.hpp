#ifndef VF_FUSION_HPP
#define VF_FUSION_HPP

#include <optional>
#include <vector>

#include "vf/primary.hpp"

namespace vf {

/// Index sets of the closed-form decomposition
///   M(mu1) (x) M(mu2)  ~=  (+)_{a in A} P(a)  (+)  (+)_{b in B} M(b).
/// A, A*, A' are finite sets of integers <= -2 (resp. their partners);
/// B is infinite and reported truncated to the cutoff.
struct FusionSets {
  std::vector<long> A;       // ascending
  std::vector<long> AStar;   // {-a-2 : a in A}, ascending
  std::vector<long> APrime;  // ascending
  std::vector<GaussianRational> BTruncated;  // ascending layer k
  bool truncated = true;
  GaussianRational xStart;  // X = xStart - 2N

  bool inA(const GaussianRational& nu) const;
  bool inAStar(const GaussianRational& nu) const;
  bool inAPrimeUnion(const GaussianRational& nu) const;  // A' or A'*
};

struct Summand {
  ComponentTag tag = ComponentTag::Verma;  // Verma or ProjectiveCover
  GaussianRational weight;                 // M(weight) or P(weight)
};

struct OrbitComparison {
  CharacterOrbit orbit;
  PrimaryComponentShape oracleShape;
  ComponentTag predictedTag = ComponentTag::Verma;
  bool agrees = false;
};

struct DecompositionReport {
  TensorModuleSpec spec;
  FusionSets fusionSets;
  std::vector<Summand> summands;  // ordered by layer of the weight
  std::optional<std::vector<OrbitComparison>> oracleComparison;

  bool oracleAgrees() const;
};

struct Theorem2Report {
  bool homDimTwo = false;        // (i)
  bool integralWindow = false;   // (ii)
  bool rcVanishes = false;       // (iii)
  bool pairComponent = false;    // (iv)
  bool allAgree() const {
    return homDimTwo == integralWindow && integralWindow == rcVanishes &&
           rcVanishes == pairComponent;
  }
};

struct IsoCheckResult {
  bool hypothesisMet = false;
  bool isomorphic = false;
};

struct CorollaryReport {
  bool multiplicityFree = false;
  bool selfDual = false;
  bool noReducibleVermaSummand = false;
  // When mu1, mu2 in N: a weight nu in B with dim Hom(M(-nu-2), .) = 2.
  std::optional<GaussianRational> witness;
  std::optional<unsigned> witnessHomDim;
};

FusionSets fusionSets(const GaussianRational& mu1, const GaussianRational& mu2,
                      unsigned cutoff);

DecompositionReport predictedDecomposition(const GaussianRational& mu1,
                                           const GaussianRational& mu2,
                                           unsigned cutoff, bool verify);

// Theorem condition: lam1, lam2, lam3 integers, 2 >= lam1+lam2+lam3 and
// lam3 >= |lam1-lam2| + 2 (false when lam3-lam1-lam2 is not in 2N).
bool theorem2ConditionII(const GaussianRational& lam1, const GaussianRational& lam2,
                         const GaussianRational& lam3);

Theorem2Report theorem2Crosscheck(const GaussianRational& lam1,
                                  const GaussianRational& lam2,
                                  const GaussianRational& lam3, unsigned cutoff);

// sl2, rho = 1: lam is anti-dominant iff lam is not a natural number.
bool isAntidominant(const GaussianRational& lam);

IsoCheckResult tensorIsoCheck(const GaussianRational& mu1, const GaussianRational& mu2,
                              const GaussianRational& nu1, const GaussianRational& nu2);

// M(nu) occurs as a direct summand iff mu1, mu2 in N and
// |mu1-mu2| <= nu <= mu1+mu2 (Clebsch-Gordan window).
bool clebschGordanSummand(const GaussianRational& nu, const GaussianRational& mu1,
                          const GaussianRational& mu2);

CorollaryReport corollaryPredicates(const GaussianRational& mu1,
                                    const GaussianRational& mu2, unsigned cutoff);

}  // namespace vf

#endif
