#pragma once

// JSON documents for reports, tables and sweep records.  Field names are
// part of the CLI contract; see docs/json_schemas.md.

#include <json.hpp>

#include "turnover/collars.hpp"
#include "turnover/engine.hpp"
#include "turnover/rooms.hpp"
#include "turnover/simplices.hpp"
#include "turnover/trig.hpp"

namespace turnover {

using Json = nlohmann::ordered_json;

Json to_json(const TurnoverSignature& sig);
Json to_json(const ConeOrderSet& orders);
Json to_json(const TriangleGeometry& geometry);
Json to_json(const BoundLedger& ledger);
Json to_json(const OrderFilterReport& report);
Json to_json(const CaseResult& result);
Json to_json(const RefinementResult& result);
Json to_json(const AnalysisReport& report);
Json to_json(const TruncatedSimplexSpec& simplex);
Json to_json(const RegistryEntry& entry);

/// {V, A_C, A_S, H_equiv, margin}
Json room_record(const RoomSpec& room);

Json registry_json();
Json table1_json();
Json supergroups_json(const TurnoverSignature& sig);

}  // namespace turnover
