#pragma once

#include <string>

#include "json.hpp"
#include "linkrep/analysis.hpp"
#include "linkrep/families.hpp"

namespace linkrep {

// Insertion-ordered JSON keeps field order stable across runs.
using Json = nlohmann::ordered_json;

Json json_of(const LinkDiagram& d);
Json json_of(const SimpleGraph& g);
Json json_of(const GraphVerdict& v);
Json json_of(const AlexanderReport& r);
Json json_of(const MeridianTracelessRep& r);
Json json_of(const RepVerification& v);
Json json_of(const DihedralSolutionSet& s);
Json json_of(const Certificate& c);
Json json_of(const CertificateSearchResult& r);
Json json_of(const AnalysisReport& r);

Certificate certificate_from_json(const Json& j);

}  // namespace linkrep
