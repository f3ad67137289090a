#pragma once

#include <json.hpp>

#include "starlab/order.hpp"
#include "starlab/theorem_lab.hpp"

namespace starlab {

using Json = nlohmann::ordered_json;

Json witness_json(const std::vector<ElementId>& witness);
Json check_json(const CheckResult& check);

/// {label, order, flags, witnesses, covers, pq_baer_projections}. Only
/// failing flags carry a witness.
Json to_json(const ClassificationReport& report, const CentralCoverTable& covers);
/// Array indexed by element; null where no cover exists.
Json to_json(const CentralCoverTable& covers);
Json to_json(const OrderStructure& order);
Json to_json(const SegmentPoset& segment);
Json to_json(const TheoremVerdict& verdict);
Json to_json(const std::vector<TheoremVerdict>& verdicts);
Json to_json(const FuzzConfig& config);
Json to_json(const FuzzReport& report);

}  // namespace starlab
