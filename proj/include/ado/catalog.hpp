#pragma once

#include <string>
#include <vector>

#include "ado/engine.hpp"
#include "ado/quantum_algebra.hpp"
#include "json.hpp"

namespace ado {

using json = nlohmann::json;

// One JSON object per line; blank lines are skipped, unknown fields ignored.
std::vector<KnotRecord> load_catalog(const std::string& path);
std::vector<KnotRecord> parse_catalog(const std::string& text);
KnotRecord record_from_json(const json& j);
json record_to_json(const KnotRecord& r);
const KnotRecord& find_record(const std::vector<KnotRecord>& cat, const std::string& name);

// Power-basis coordinates as "num/den" strings.
json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j, const RingCtx& ring);

json to_json(const AdoPoly& f);
AdoPoly poly_from_json(const json& j);

json to_json(const AdoResult& r);
AdoResult result_from_json(const json& j);

json to_json(const LaurentA& x);
json to_json(const LMatrix& m);

}  // namespace ado
