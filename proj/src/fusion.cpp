#include "vf/fusion.hpp"

#include <algorithm>
#include <cstdlib>

#include "vf/rankin_cohen.hpp"

namespace vf {

namespace {

bool containsLong(const std::vector<long>& v, const GaussianRational& x) {
  if (!x.isInteger() || !x.re().get_num().fits_slong_p()) return false;
  long value = x.re().get_num().get_si();
  return std::find(v.begin(), v.end(), value) != v.end();
}

long toLong(const GaussianRational& x) { return x.re().get_num().get_si(); }

// X cap [lo, -2] for X = s - 2N with s a natural number: integers of the
// parity of s, ascending.
std::vector<long> intervalInX(long s, long lo) {
  std::vector<long> out;
  long start = lo;
  if ((start - s) % 2 != 0) ++start;  // align to the parity of s
  for (long nu = start; nu <= -2; nu += 2) out.push_back(nu);
  return out;
}

}  // namespace

bool FusionSets::inA(const GaussianRational& nu) const { return containsLong(A, nu); }
bool FusionSets::inAStar(const GaussianRational& nu) const {
  return containsLong(AStar, nu);
}
bool FusionSets::inAPrimeUnion(const GaussianRational& nu) const {
  return containsLong(APrime, nu) ||
         containsLong(APrime, -nu - GaussianRational(2));
}

FusionSets fusionSets(const GaussianRational& mu1, const GaussianRational& mu2,
                      unsigned cutoff) {
  FusionSets fs;
  GaussianRational sum = mu1 + mu2;
  fs.xStart = sum;
  if (sum.isNatural()) {
    long s = toLong(sum);
    if (mu1.isNatural() && mu2.isNatural()) {
      long d = std::labs(toLong(mu1) - toLong(mu2));
      fs.A = intervalInX(s, -d);
    } else {
      fs.A = intervalInX(s, -s - 2);
    }
    fs.APrime = intervalInX(s, -s - 2);
    for (auto it = fs.A.rbegin(); it != fs.A.rend(); ++it)
      fs.AStar.push_back(-*it - 2);
  }
  for (unsigned k = 0; k <= cutoff; ++k) {
    GaussianRational nu = sum - GaussianRational(2 * static_cast<long>(k));
    if (fs.inA(nu) || fs.inAStar(nu)) continue;
    fs.BTruncated.push_back(nu);
  }
  fs.truncated = true;
  return fs;
}

bool DecompositionReport::oracleAgrees() const {
  if (!oracleComparison) return false;
  return std::all_of(oracleComparison->begin(), oracleComparison->end(),
                     [](const OrbitComparison& c) { return c.agrees; });
}

DecompositionReport predictedDecomposition(const GaussianRational& mu1,
                                           const GaussianRational& mu2,
                                           unsigned cutoff, bool verify) {
  DecompositionReport report;
  report.spec = TensorModuleSpec{mu1, mu2, cutoff};
  report.fusionSets = fusionSets(mu1, mu2, cutoff);
  const FusionSets& fs = report.fusionSets;

  if (!fs.A.empty()) {
    long s = toLong(mu1 + mu2);
    unsigned needed = static_cast<unsigned>((s - fs.A.front()) / 2);
    if (cutoff < needed)
      throw InsufficientCutoffError(
          "decompose: cutoff too small to cover the projective summands", needed);
  }

  for (unsigned k = 0; k <= cutoff; ++k) {
    GaussianRational nu = report.spec.layerWeight(k);
    if (fs.inA(nu)) {
      report.summands.push_back({ComponentTag::ProjectiveCover, nu});
    } else if (fs.inAStar(nu)) {
      // absorbed into P(-nu-2)
    } else {
      report.summands.push_back({ComponentTag::Verma, nu});
    }
  }

  if (verify) {
    std::vector<OrbitComparison> comparisons;
    for (const CharacterOrbit& orbit : characterSupport(report.spec)) {
      if (orbit.maxLayer() > cutoff) continue;  // beyond the truncation
      OrbitComparison cmp;
      cmp.orbit = orbit;
      cmp.oracleShape = classifyComponent(report.spec, orbit);
      if (!orbit.partnerInX || orbit.isSelfPaired())
        cmp.predictedTag = ComponentTag::Verma;
      else if (fs.inA(orbit.partner))
        cmp.predictedTag = ComponentTag::ProjectiveCover;
      else
        cmp.predictedTag = ComponentTag::VermaPair;
      cmp.agrees = cmp.oracleShape.tag == cmp.predictedTag;
      comparisons.push_back(std::move(cmp));
    }
    report.oracleComparison = std::move(comparisons);
  }
  return report;
}

bool theorem2ConditionII(const GaussianRational& lam1, const GaussianRational& lam2,
                         const GaussianRational& lam3) {
  if (!rcDegree(lam1, lam2, lam3)) return false;
  if (!lam1.isInteger() || !lam2.isInteger() || !lam3.isInteger()) return false;
  mpq_class sum = lam1.re() + lam2.re() + lam3.re();
  if (sum > 2) return false;
  mpq_class gap = abs(lam1.re() - lam2.re()) + 2;
  return lam3.re() >= gap;
}

Theorem2Report theorem2Crosscheck(const GaussianRational& lam1,
                                  const GaussianRational& lam2,
                                  const GaussianRational& lam3, unsigned cutoff) {
  if (!rcDegree(lam1, lam2, lam3))
    throw PreconditionError("theorem2_crosscheck: lam3 - lam1 - lam2 must lie in 2N");

  Theorem2Report report;
  report.homDimTwo = homDim(lam1, lam2, lam3, cutoff) == 2;
  report.integralWindow = theorem2ConditionII(lam1, lam2, lam3);
  report.rcVanishes = rcIsZero(lam1, lam2, lam3);

  report.pairComponent = false;
  if (lam3.isReal() && lam3.re() >= 2) {
    TensorModuleSpec spec{-lam1, -lam2, cutoff};
    GaussianRational nu = -lam3;
    for (const CharacterOrbit& orbit : characterSupport(spec)) {
      bool hit = orbit.nu == nu || (orbit.partnerInX && orbit.partner == nu);
      if (!hit) continue;
      PrimaryComponentShape shape = classifyComponent(spec, orbit);
      report.pairComponent =
          shape.tag == ComponentTag::VermaPair && shape.nuLow == nu;
      break;
    }
  }
  return report;
}

bool isAntidominant(const GaussianRational& lam) { return !lam.isNatural(); }

IsoCheckResult tensorIsoCheck(const GaussianRational& mu1, const GaussianRational& mu2,
                              const GaussianRational& nu1, const GaussianRational& nu2) {
  IsoCheckResult result;
  bool sumsEqual = mu1 + mu2 == nu1 + nu2;
  result.hypothesisMet = sumsEqual &&
                         (isAntidominant(mu1) || isAntidominant(mu2)) &&
                         (isAntidominant(nu1) || isAntidominant(nu2));
  // same X (equal sums) and same A determine the full summand multiset
  result.isomorphic =
      sumsEqual && fusionSets(mu1, mu2, 0).A == fusionSets(nu1, nu2, 0).A;
  return result;
}

bool clebschGordanSummand(const GaussianRational& nu, const GaussianRational& mu1,
                          const GaussianRational& mu2) {
  if (!nu.isNatural())
    throw PreconditionError("clebsch_gordan_summand: nu must lie in N");
  if (!mu1.isNatural() || !mu2.isNatural()) return false;
  mpq_class lo = abs(mu1.re() - mu2.re());
  mpq_class hi = mu1.re() + mu2.re();
  if (nu.re() < lo || nu.re() > hi) return false;
  // nu must share the parity of mu1 + mu2, i.e. lie in X
  mpq_class gap = hi - nu.re();
  return mpz_even_p(gap.get_num().get_mpz_t()) != 0;
}

CorollaryReport corollaryPredicates(const GaussianRational& mu1,
                                    const GaussianRational& mu2, unsigned cutoff) {
  CorollaryReport report;
  FusionSets fs = fusionSets(mu1, mu2, cutoff);
  std::vector<GaussianRational> bNat;
  for (const auto& b : fs.BTruncated)
    if (b.isNatural()) bNat.push_back(b);

  bool noneNat = bNat.empty();
  report.multiplicityFree = noneNat;
  report.selfDual = noneNat;
  report.noReducibleVermaSummand = noneNat;

  if (!noneNat) {
    // proof witness: dim Hom(M(-nu-2), M(mu1) (x) M(mu2)) = 2 for nu in B cap N
    GaussianRational nu = bNat.front();
    GaussianRational layer2 = (mu1 + mu2 + nu + GaussianRational(2)) / GaussianRational(2);
    if (layer2.isNatural() &&
        layer2.re().get_num().fits_ulong_p() &&
        layer2.re().get_num().get_ui() <= cutoff) {
      report.witness = nu;
      report.witnessHomDim = homDim(-mu1, -mu2, nu + GaussianRational(2), cutoff);
    }
  }
  return report;
}

}  // namespace vf
