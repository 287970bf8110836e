#include "verma_fusion.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "vf/report.hpp"
#include "vf/verify.hpp"

struct vf_session {
  std::string lastError;
};

namespace {

char* copyOut(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

vf_status fail(vf_session* session, vf_status status, const std::string& message) {
  if (session) session->lastError = message;
  return status;
}

vf_status emit(vf_session* session, const vf::json& document, char** outJson) {
  if (!outJson) return fail(session, VF_ERR_INPUT, "out_json is null");
  *outJson = copyOut(document.dump(2));
  return VF_OK;
}

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
vf_status guarded(vf_session* session, Fn&& fn) {
  try {
    return fn();
  } catch (const vf::ParseError& e) {
    return fail(session, VF_ERR_INPUT, e.what());
  } catch (const vf::PreconditionError& e) {
    return fail(session, VF_ERR_PRECONDITION, e.what());
  } catch (const vf::InsufficientCutoffError& e) {
    return fail(session, VF_ERR_PRECONDITION, e.what());
  } catch (const vf::RangeError& e) {
    return fail(session, VF_ERR_PRECONDITION, e.what());
  } catch (const std::exception& e) {
    return fail(session, VF_ERR_INTERNAL, e.what());
  }
}

vf_status rcCommon(vf_session* session, const char* lam1, const char* lam2,
                   const char* lam3, const char* fJson, const char* gJson,
                   char** outJson) {
  return guarded(session, [&]() -> vf_status {
    vf::GaussianRational l1 = vf::parseScalar(lam1 ? lam1 : "");
    vf::GaussianRational l2 = vf::parseScalar(lam2 ? lam2 : "");
    vf::GaussianRational l3 = vf::parseScalar(lam3 ? lam3 : "");
    auto ell = vf::rcDegree(l1, l2, l3);
    if (!ell)
      return fail(session, VF_ERR_PRECONDITION,
                  "rc: lam3 - lam1 - lam2 must lie in 2N");
    vf::RCOperator op = vf::rcCoefficients(l1, l2, *ell);
    vf::json results = vf::rcOperatorToJson(op);

    if (fJson && gJson) {
      vf::Poly1 f = vf::polyFromJson(vf::json::parse(fJson, nullptr, true));
      vf::Poly1 g = vf::polyFromJson(vf::json::parse(gJson, nullptr, true));
      results["applied"] = vf::polyToJson(vf::rcApply(op, f, g));
    }

    vf::json document = vf::envelope("rc",
                                     vf::json{{"lam1", vf::formatScalar(l1)},
                                              {"lam2", vf::formatScalar(l2)},
                                              {"lam3", vf::formatScalar(l3)}},
                                     0, std::move(results), false);
    return emit(session, document, outJson);
  });
}

}  // namespace

extern "C" {

vf_session* vf_session_new(void) { return new vf_session; }

void vf_session_free(vf_session* session) { delete session; }

const char* vf_last_error(const vf_session* session) {
  return session ? session->lastError.c_str() : "";
}

const char* vf_version(void) { return vf::kVersion; }

void vf_string_free(char* text) { std::free(text); }

vf_status vf_decompose(vf_session* session, const char* mu1, const char* mu2,
                       unsigned cutoff, unsigned flags, char** out_json) {
  return guarded(session, [&]() -> vf_status {
    bool verify = (flags & VF_DECOMPOSE_VERIFY) != 0;
    vf::GaussianRational m1 = vf::parseScalar(mu1 ? mu1 : "");
    vf::GaussianRational m2 = vf::parseScalar(mu2 ? mu2 : "");
    vf::DecompositionReport report = vf::predictedDecomposition(m1, m2, cutoff, verify);

    vf::json results = vf::decompositionToJson(report);
    if (flags & VF_DECOMPOSE_DUMP_MATRICES)
      results["matrices"] = vf::layerMatricesToJson(report.spec);
    vf::json document = vf::envelope(
        "decompose",
        vf::json{{"mu1", vf::formatScalar(m1)}, {"mu2", vf::formatScalar(m2)}}, cutoff,
        std::move(results), verify && report.oracleAgrees());

    vf_status status = emit(session, document, out_json);
    if (status != VF_OK) return status;
    if (verify && !report.oracleAgrees())
      return fail(session, VF_ERR_DISAGREEMENT,
                  "oracle classification disagrees with the closed form");
    return VF_OK;
  });
}

vf_status vf_rc(vf_session* session, const char* lam1, const char* lam2,
                const char* lam3, char** out_json) {
  return rcCommon(session, lam1, lam2, lam3, nullptr, nullptr, out_json);
}

vf_status vf_rc_apply(vf_session* session, const char* lam1, const char* lam2,
                      const char* lam3, const char* f_json, const char* g_json,
                      char** out_json) {
  if (!f_json || !g_json)
    return fail(session, VF_ERR_INPUT, "rc_apply: missing polynomial input");
  return rcCommon(session, lam1, lam2, lam3, f_json, g_json, out_json);
}

vf_status vf_homdim(vf_session* session, const char* lam1, const char* lam2,
                    const char* lam3, unsigned cutoff, char** out_json) {
  return guarded(session, [&]() -> vf_status {
    vf::GaussianRational l1 = vf::parseScalar(lam1 ? lam1 : "");
    vf::GaussianRational l2 = vf::parseScalar(lam2 ? lam2 : "");
    vf::GaussianRational l3 = vf::parseScalar(lam3 ? lam3 : "");
    unsigned dim = vf::homDim(l1, l2, l3, cutoff);

    vf::json results{{"dim", dim}};
    if (auto ell = vf::rcDegree(l1, l2, l3)) {
      vf::TensorModuleSpec spec{-l1, -l2, cutoff};
      results["layer"] = *ell;
      results["singular_dim_unrestricted"] =
          vf::singularVectors(spec, *ell).cols();
    }
    vf::json document = vf::envelope("homdim",
                                     vf::json{{"lam1", vf::formatScalar(l1)},
                                              {"lam2", vf::formatScalar(l2)},
                                              {"lam3", vf::formatScalar(l3)}},
                                     cutoff, std::move(results), false);
    return emit(session, document, out_json);
  });
}

vf_status vf_verify_case(vf_session* session, const char* case_line, unsigned cutoff,
                         char** out_json) {
  return guarded(session, [&]() -> vf_status {
    vf::VerifyCaseResult result =
        vf::runVerifyCase(case_line ? case_line : "", cutoff);
    vf::json document{{"suite", result.suite},
                      {"pass", result.pass},
                      {"details", std::move(result.details)}};
    vf_status status = emit(session, document, out_json);
    if (status != VF_OK) return status;
    if (!result.pass)
      return fail(session, VF_ERR_DISAGREEMENT, "verify case failed");
    return VF_OK;
  });
}

}  // extern "C"
