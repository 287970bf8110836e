#ifndef VF_CHARACTERS_HPP
#define VF_CHARACTERS_HPP

#include <map>
#include <utility>
#include <vector>

#include "vf/fusion.hpp"
#include "vf/scalar.hpp"

namespace vf {

/// Finitely supported multiset of Verma classes [M(nu)].
struct GrothendieckVector {
  std::map<GaussianRational, unsigned, LexLess> entries;
  bool truncated = false;

  void add(const GaussianRational& nu, unsigned multiplicity = 1) {
    if (multiplicity == 0) return;
    entries[nu] += multiplicity;
  }
  GrothendieckVector& operator+=(const GrothendieckVector& o) {
    for (const auto& [nu, m] : o.entries) add(nu, m);
    truncated = truncated || o.truncated;
    return *this;
  }
  bool sameEntries(const GrothendieckVector& o) const { return entries == o.entries; }
};

/// Weight multiplicities of a finite-dimensional module; e.g. L(n) has
/// weights n, n-2, ..., -n each with multiplicity 1.
using FiniteDimCharacter = std::vector<std::pair<GaussianRational, unsigned>>;

FiniteDimCharacter simpleModuleCharacter(unsigned n);  // L(n)

// [M(mu1) (x) M(mu2)] truncated to layers k <= cutoff: one class at
// mu1+mu2-2k each.
GrothendieckVector tensorCharacter(const GaussianRational& mu1,
                                   const GaussianRational& mu2, unsigned cutoff);

// [M(mu) (x) N] = sum over weights nu of N of dim N_nu [M(mu+nu)].
GrothendieckVector vermaTensorModuleCharacter(const GaussianRational& mu,
                                              const FiniteDimCharacter& n);

// Equality in the Grothendieck group; holds iff mu1+mu2 == nu1+nu2.
bool grothendieckEqual(const GaussianRational& mu1, const GaussianRational& mu2,
                       const GaussianRational& nu1, const GaussianRational& nu2,
                       unsigned cutoff);

// Character of the primary component at nu (which must lie in X within the
// cutoff): length two on A' u A'*, length one otherwise.
GrothendieckVector componentCharacter(const GaussianRational& mu1,
                                      const GaussianRational& mu2,
                                      const GaussianRational& nu, unsigned cutoff);

// Character of a summand list, using [P(a)] = [M(a)] + [M(-a-2)].
GrothendieckVector summandsCharacter(const std::vector<Summand>& summands);

}  // namespace vf

#endif
