#ifndef VF_REPORT_HPP
#define VF_REPORT_HPP

#include <nlohmann/json.hpp>

#include "vf/characters.hpp"
#include "vf/fusion.hpp"
#include "vf/rankin_cohen.hpp"

namespace vf {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

// Envelope shared by all commands; nlohmann objects keep keys sorted, so the
// serialization is byte-stable.
json envelope(const std::string& command, json inputs, unsigned cutoff, json results,
              bool oracleVerified);

json fusionSetsToJson(const FusionSets& fs);
json summandsToJson(const std::vector<Summand>& summands);
json orbitComparisonsToJson(const std::vector<OrbitComparison>& comparisons);
json decompositionToJson(const DecompositionReport& report);
json matrixToJson(const Matrix& m);
// raising/lowering/casimir/cartan data per layer, for --dump-matrices
json layerMatricesToJson(const TensorModuleSpec& spec);
json rcOperatorToJson(const RCOperator& op);
json polyToJson(const Poly1& p);
Poly1 polyFromJson(const json& j);
json grothendieckToJson(const GrothendieckVector& v);

std::string tagName(ComponentTag tag);

}  // namespace vf

#endif
