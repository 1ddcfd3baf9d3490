#pragma once

#include <json.hpp>

#include "forest/reducer.hpp"

namespace forest {

// Vertex ids are written 1-based; apex indices inside a step stay 0-based.
nlohmann::json step_to_json(const ReductionStep& s);
ReductionStep step_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ForestCertificate& c);
// Throws ReducerError on a malformed document.
ForestCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace forest
