#include "vf/report.hpp"

namespace vf {

std::string tagName(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::Verma:
      return "verma";
    case ComponentTag::VermaPair:
      return "verma_pair";
    case ComponentTag::ProjectiveCover:
      return "projective_cover";
  }
  return "unknown";
}

json envelope(const std::string& command, json inputs, unsigned cutoff, json results,
              bool oracleVerified) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"cutoff", cutoff},
              {"results", std::move(results)},
              {"oracle_verified", oracleVerified},
              {"version", kVersion}};
}

json fusionSetsToJson(const FusionSets& fs) {
  json b = json::array();
  for (const auto& x : fs.BTruncated) b.push_back(formatScalar(x));
  return json{{"A", fs.A},
              {"A_star", fs.AStar},
              {"A_prime", fs.APrime},
              {"B_truncated", b},
              {"truncated", fs.truncated},
              {"X", json{{"start", formatScalar(fs.xStart)}, {"step", -2}}}};
}

json summandsToJson(const std::vector<Summand>& summands) {
  json out = json::array();
  for (const Summand& s : summands)
    out.push_back(json{{"type", tagName(s.tag)}, {"weight", formatScalar(s.weight)}});
  return out;
}

json orbitComparisonsToJson(const std::vector<OrbitComparison>& comparisons) {
  json out = json::array();
  for (const OrbitComparison& c : comparisons) {
    json o{{"nu", formatScalar(c.orbit.nu)},
           {"layer", c.orbit.k},
           {"classification", tagName(c.oracleShape.tag)},
           {"predicted", tagName(c.predictedTag)},
           {"agrees", c.agrees},
           {"evidence",
            json{{"singular_count_low", c.oracleShape.evidence.singularCountLow},
                 {"singular_count_high", c.oracleShape.evidence.singularCountHigh},
                 {"casimir_nilpotent", c.oracleShape.evidence.casimirNilpotent}}}};
    if (c.orbit.partnerInX) {
      o["partner"] = formatScalar(c.orbit.partner);
      o["partner_layer"] = *c.orbit.kPartner;
    }
    out.push_back(std::move(o));
  }
  return out;
}

json decompositionToJson(const DecompositionReport& report) {
  json out{{"fusion_sets", fusionSetsToJson(report.fusionSets)},
           {"summands", summandsToJson(report.summands)}};
  if (report.oracleComparison) {
    out["orbits"] = orbitComparisonsToJson(*report.oracleComparison);
    out["oracle_agrees"] = report.oracleAgrees();
  }
  return out;
}

json matrixToJson(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(formatScalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json layerMatricesToJson(const TensorModuleSpec& spec) {
  json layers = json::array();
  for (unsigned k = 0; k <= spec.cutoff; ++k) {
    json layer{{"k", k},
               {"weight", formatScalar(spec.layerWeight(k))},
               {"cartan", formatScalar(cartanValue(spec, k))},
               {"casimir", matrixToJson(casimirMatrix(spec, k))}};
    if (k >= 1) layer["raising"] = matrixToJson(raisingMatrix(spec, k));
    if (k + 1 <= spec.cutoff) layer["lowering"] = matrixToJson(loweringMatrix(spec, k));
    layers.push_back(std::move(layer));
  }
  return layers;
}

json rcOperatorToJson(const RCOperator& op) {
  json coeffs = json::array();
  for (const auto& c : op.coeffs) coeffs.push_back(formatScalar(c));
  return json{{"lam1", formatScalar(op.lam1)},
              {"lam2", formatScalar(op.lam2)},
              {"lam3", formatScalar(op.lam3)},
              {"ell", op.ell},
              {"coeffs", coeffs},
              {"is_zero", op.isZero()}};
}

json polyToJson(const Poly1& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(formatScalar(c));
  return out;
}

Poly1 polyFromJson(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array", 0);
  std::vector<GaussianRational> coeffs;
  for (const auto& entry : j) {
    if (!entry.is_string())
      throw ParseError("polynomial coefficients must be scalar strings", 0);
    coeffs.push_back(parseScalar(entry.get<std::string>()));
  }
  return Poly1(std::move(coeffs));
}

json grothendieckToJson(const GrothendieckVector& v) {
  json out = json::array();
  for (const auto& [nu, mult] : v.entries)
    out.push_back(json{{"weight", formatScalar(nu)}, {"multiplicity", mult}});
  return out;
}

}  // namespace vf
