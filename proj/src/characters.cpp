#include "vf/characters.hpp"

namespace vf {

FiniteDimCharacter simpleModuleCharacter(unsigned n) {
  FiniteDimCharacter character;
  for (long w = static_cast<long>(n); w >= -static_cast<long>(n); w -= 2)
    character.emplace_back(GaussianRational(w), 1);
  return character;
}

GrothendieckVector tensorCharacter(const GaussianRational& mu1,
                                   const GaussianRational& mu2, unsigned cutoff) {
  GrothendieckVector v;
  v.truncated = true;
  GaussianRational sum = mu1 + mu2;
  for (unsigned k = 0; k <= cutoff; ++k)
    v.add(sum - GaussianRational(2 * static_cast<long>(k)));
  return v;
}

GrothendieckVector vermaTensorModuleCharacter(const GaussianRational& mu,
                                              const FiniteDimCharacter& n) {
  GrothendieckVector v;
  for (const auto& [weight, dim] : n) v.add(mu + weight, dim);
  return v;
}

bool grothendieckEqual(const GaussianRational& mu1, const GaussianRational& mu2,
                       const GaussianRational& nu1, const GaussianRational& nu2,
                       unsigned cutoff) {
  return tensorCharacter(mu1, mu2, cutoff).sameEntries(
      tensorCharacter(nu1, nu2, cutoff));
}

GrothendieckVector componentCharacter(const GaussianRational& mu1,
                                      const GaussianRational& mu2,
                                      const GaussianRational& nu, unsigned cutoff) {
  // nu must be mu1+mu2-2k for some k <= cutoff
  GaussianRational twoK = mu1 + mu2 - nu;
  GaussianRational k = twoK / GaussianRational(2);
  if (!k.isNatural() || !k.re().get_num().fits_ulong_p() ||
      k.re().get_num().get_ui() > cutoff)
    throw PreconditionError("component_character: nu does not lie in the truncated X");

  GrothendieckVector v;
  v.add(nu);
  if (fusionSets(mu1, mu2, 0).inAPrimeUnion(nu)) v.add(-nu - GaussianRational(2));
  return v;
}

GrothendieckVector summandsCharacter(const std::vector<Summand>& summands) {
  GrothendieckVector v;
  v.truncated = true;
  for (const Summand& s : summands) {
    v.add(s.weight);
    if (s.tag == ComponentTag::ProjectiveCover) v.add(-s.weight - GaussianRational(2));
  }
  return v;
}

}  // namespace vf
