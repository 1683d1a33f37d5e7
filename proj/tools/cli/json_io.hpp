#pragma once

#include <nlohmann/json.hpp>

#include "weyllab/harness.hpp"
#include "weyllab/verifier.hpp"

namespace weyl::json {

using nlohmann::json;

json toJson(const ExactComplex& z);  // ["re", "im"]
json toJson(const Cell& cell);
json toJson(const CellSet& s);
json toJson(const SpectralSnapshot& s);  // the 18 set keys
json toJson(const TheoremReport& r);
json toJson(const Assignment& a);
json toJson(const CatalogVerdict& v);
json toJson(const CorpusReport& r);
/// One row per catalog entry.
json profileJson(const SpectralSnapshot& s);

/// Inverse of toJson(const Cell&). Throws SyntaxError.
Cell cellFromJson(const json& j);

}  // namespace weyl::json
