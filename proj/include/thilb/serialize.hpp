#pragma once

#include <string>

#include <json.hpp>

#include "thilb/hilbert_scheme.hpp"

namespace thilb {

// exponent vectors as plain integer arrays; entries are desk-scale
nlohmann::json exps_json(const IntVec& v);

nlohmann::json binomial_json(const Binomial& b);
nlohmann::json ideal_json(const MonomialIdeal& I);

// [{"l": [...], "plus": [...], "minus": [...]}, ...]
nlohmann::json graver_json(const GraverBasis& Gr);

nlohmann::json chambers_json(const ChamberComplex& cc);

// {"rays": [[a,b],...], "support": "...",
//  "cones": [{"rays": [i,j], "ideal": [[exps],...]}, ...]}
nlohmann::json fan_json(const GroebnerFan2& fan);

// inverse of fan_json (rays, support, cones with ideals)
struct ParsedFan {
  SupportKind support;
  std::vector<IntVec> rays;
  std::vector<std::pair<std::pair<int, int>, MonomialIdeal>> cones;
};
ParsedFan parse_fan_json(const nlohmann::json& j);
ParsedFan fan_to_parsed(const GroebnerFan2& fan);
bool operator==(const ParsedFan& a, const ParsedFan& b);

nlohmann::json ideals_json(const GroebnerFan2& fan,
                           const std::vector<MonomialIdeal>& ideals);

nlohmann::json flips_json(const FlipGraph& g);
std::string flip_graph_dot(const FlipGraph& g);

nlohmann::json tangent_json(const std::vector<MonomialIdeal>& ideals,
                            const std::vector<int>& flip_counts,
                            const std::vector<int>& tangent_dims);

nlohmann::json report_json(const VerificationReport& rep);

nlohmann::json normalization_json(const GaleLattice& L, const NormalizationLog& log);

std::string fan_svg(const GroebnerFan2& fan);

}  // namespace thilb
