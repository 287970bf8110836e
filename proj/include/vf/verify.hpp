#ifndef VF_VERIFY_HPP
#define VF_VERIFY_HPP

#include <string>

#include "vf/report.hpp"

namespace vf {

/// One line of a verification grid file: `suite,scalar,scalar,...`.
/// Suites: decompose(mu1,mu2), iso(mu1,mu2,nu1,nu2), theorem2(l1,l2,l3),
/// cg(nu,mu1,mu2), corollary(mu1,mu2).
struct VerifyCaseResult {
  std::string suite;
  bool pass = false;
  json details;
};

VerifyCaseResult runVerifyCase(const std::string& line, unsigned cutoff);

}  // namespace vf

#endif
