#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "trigrid/grid.hpp"
#include "trigrid/isoperimetry.hpp"
#include "trigrid/lions.hpp"
#include "trigrid/search.hpp"

namespace trigrid::io {

using nlohmann::json;

/// Members as [col, row] pairs in lexicographic order.
json to_json(const TriGrid& g, const VertexSet& s);
VertexSet vertex_set_from_json(const TriGrid& g, const json& j);

/// Bit i of the set is dense id i. Hex digit j (left to right) carries ids
/// 4j..4j+3 with id 4j in its least significant bit; ceil(|V|/4) digits.
std::string to_hex(const VertexSet& s);
VertexSet vertex_set_from_hex(const TriGrid& g, const std::string& hex);

/// FNV-1a over the hex encoding, printed as 16 lowercase hex digits.
std::string checksum(const VertexSet& s);

/// {n, budget, searches: [[[c, r], ...], ...], checksums: [...], stages: [...]}.
/// Dirty sets are not stored; their checksums are.
json to_json(const TriGrid& g, const SearchTrace& trace);
/// Rebuilds the trace and replays it; throws TraceValidationError when a
/// stored checksum disagrees with the replay.
SearchTrace search_trace_from_json(const json& j);

/// {n, lions, start: [[c, r], ...], moves: [[[lion, [c, r] | null], ...], ...]}.
/// Only moving lions are listed in a turn.
json to_json(const TriGrid& g, const LionTrace& trace);
LionTrace lion_trace_from_json(const json& j);

json to_json(const MinBoundaryTable& table);
/// Header `k,min_boundary,packing_min,verified`, one row per k.
std::string to_csv(const MinBoundaryTable& table);

json to_json(const SampledReport& report, const TriGrid& g);
json to_json(const SegmentReport& report);
json to_json(const std::vector<InspectionBoundsRow>& rows);
std::string to_csv(const std::vector<InspectionBoundsRow>& rows);

/// Frames with Y for searched, R for still dirty after the turn, G otherwise.
std::string render_search_frames(const TriGrid& g, const SearchTrace& trace);
/// Frames with L for lions, R for contaminated, G for clear.
std::string render_lion_frames(const TriGrid& g, const LionTrace& trace);

}  // namespace trigrid::io
