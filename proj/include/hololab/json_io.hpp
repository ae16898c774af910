#pragma once

#include <json.hpp>

#include "hololab/screener.hpp"

namespace hololab {

using Json = nlohmann::ordered_json;

/// Big integers render as JSON numbers when they fit in int64, decimal
/// strings otherwise.
Json json_int(const Int& v);

Json to_json(const CohomologyEntry& e);
Json to_json(const CohomologyReport& r);
Json to_json(const ModuleDecomposition& d, const LeviContext& ctx);
Json to_json(const LegendreAnalysis& a);
Json to_json(const KodairaAnalysis& a);
Json to_json(const ScreenVerdict& v);
Json to_json(const TableRow& r);

}  // namespace hololab
