#include "trigrid/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trigrid::io {

namespace {

json coord_json(Coord v) { return json::array({v.col, v.row}); }

Coord coord_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("expected a [col, row] pair, got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

json coords_json(std::vector<Coord> coords) {
  std::sort(coords.begin(), coords.end());
  json out = json::array();
  for (const Coord v : coords) out.push_back(coord_json(v));
  return out;
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const TriGrid& g, const VertexSet& s) { return coords_json(s.coords(g)); }

VertexSet vertex_set_from_json(const TriGrid& g, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vertex set must be a JSON array of [col, row] pairs");
  VertexSet s = g.empty_set();
  for (const auto& item : j) s.insert(g, coord_from_json(item));
  return s;
}

std::string to_hex(const VertexSet& s) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t digits = (s.capacity() + 3) / 4;
  out.reserve(digits);
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t id = 4 * d + b;
      if (id < s.capacity() && s.contains(static_cast<VertexId>(id))) nibble |= 1u << b;
    }
    out += kDigits[nibble];
  }
  return out;
}

VertexSet vertex_set_from_hex(const TriGrid& g, const std::string& hex) {
  const std::size_t digits = (g.vertex_count() + 3) / 4;
  if (hex.size() != digits) {
    throw std::invalid_argument("hex set for T_" + std::to_string(g.order()) + " needs " +
                                std::to_string(digits) + " digits, got " + std::to_string(hex.size()));
  }
  VertexSet s = g.empty_set();
  for (std::size_t d = 0; d < digits; ++d) {
    const char ch = hex[d];
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw std::invalid_argument(std::string("invalid hex digit '") + ch + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      if ((nibble >> b) & 1u) {
        const std::size_t id = 4 * d + b;
        if (id >= g.vertex_count()) throw std::invalid_argument("hex set has bits beyond the vertex count");
        s.insert(static_cast<VertexId>(id));
      }
    }
  }
  return s;
}

std::string checksum(const VertexSet& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char ch : to_hex(s)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// -- search traces --

json to_json(const TriGrid& g, const SearchTrace& trace) {
  json searches = json::array();
  json checksums = json::array();
  for (const auto& s : trace.searches) searches.push_back(to_json(g, s));
  for (const auto& d : trace.states) checksums.push_back(checksum(d));
  return {{"n", trace.n},
          {"budget", trace.budget},
          {"searches", searches},
          {"checksums", checksums},
          {"stages", trace.stages},
          {"cleared", !trace.states.empty() && trace.states.back().empty()}};
}

SearchTrace search_trace_from_json(const json& j) {
  SearchTrace trace;
  trace.n = j.at("n").get<int>();
  const TriGrid g(trace.n);
  trace.budget = j.at("budget").get<std::size_t>();
  for (const auto& s : j.at("searches")) trace.searches.push_back(vertex_set_from_json(g, s));
  if (j.contains("stages")) {
    trace.stages = j.at("stages").get<std::vector<int>>();
  } else {
    trace.stages.assign(trace.searches.size(), 0);
  }
  trace.states = replay_searches(g, trace.searches);
  if (j.contains("checksums")) {
    const auto& sums = j.at("checksums");
    if (sums.size() != trace.states.size()) {
      throw TraceValidationError(0, "checksum count does not match the number of searches");
    }
    for (std::size_t t = 0; t < sums.size(); ++t) {
      if (sums[t].get<std::string>() != checksum(trace.states[t])) {
        throw TraceValidationError(t + 1, "stored checksum disagrees with the replayed dirty set");
      }
    }
  }
  return trace;
}

// -- lion traces --

json to_json(const TriGrid& /*g*/, const LionTrace& trace) {
  json start = json::array();
  for (const Coord v : trace.start) start.push_back(coord_json(v));
  json moves = json::array();
  for (const auto& move : trace.moves) {
    json turn = json::array();
    for (std::size_t i = 0; i < move.destinations.size(); ++i) {
      if (move.destinations[i]) turn.push_back(json::array({i, coord_json(*move.destinations[i])}));
    }
    moves.push_back(turn);
  }
  json contaminated = json::array();
  for (const auto& c : trace.contaminated) contaminated.push_back(to_hex(c));
  return {{"n", trace.n},
          {"lions", trace.lions},
          {"start", start},
          {"moves", moves},
          {"contaminated", contaminated},
          {"cleared", trace.winning()}};
}

LionTrace lion_trace_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const TriGrid g(n);
  const auto lions = j.at("lions").get<std::size_t>();
  std::vector<Coord> start;
  for (const auto& v : j.at("start")) start.push_back(coord_from_json(v));
  if (start.size() != lions) throw std::invalid_argument("start lists a different number of lions");
  std::vector<LionMove> moves;
  for (const auto& turn : j.at("moves")) {
    LionMove move;
    move.destinations.assign(lions, std::nullopt);
    for (const auto& entry : turn) {
      if (!entry.is_array() || entry.size() != 2) {
        throw std::invalid_argument("move entries must be [lion_index, dest|null]");
      }
      const auto lion = entry[0].get<std::size_t>();
      if (lion >= lions) throw std::invalid_argument("move names lion " + std::to_string(lion));
      if (!entry[1].is_null()) move.destinations[lion] = coord_from_json(entry[1]);
    }
    moves.push_back(std::move(move));
  }
  return replay_lions(g, start, moves);
}

// -- tables and reports --

json to_json(const MinBoundaryTable& table) {
  const TriGrid g(table.n);
  json rows = json::array();
  for (const auto& e : table.entries) {
    rows.push_back({{"k", e.k},
                    {"min_boundary", e.min_boundary},
                    {"packing_min", e.packing_min},
                    {"verified", e.verified},
                    {"witness", to_hex(VertexSet::from_mask(g, e.witness))}});
  }
  return {{"n", table.n}, {"entries", rows}, {"all_verified", table.all_verified()}};
}

std::string to_csv(const MinBoundaryTable& table) {
  std::ostringstream out;
  out << "k,min_boundary,packing_min,verified\n";
  for (const auto& e : table.entries) {
    out << e.k << ',' << e.min_boundary << ',' << e.packing_min << ',' << (e.verified ? "true" : "false")
        << '\n';
  }
  return out.str();
}

json to_json(const SampledReport& report, const TriGrid& g) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"sample", v.sample},
                          {"size", v.size},
                          {"boundary", v.boundary},
                          {"packing_min", v.packing_min},
                          {"set", to_json(g, v.set)}});
  }
  json per_k = json::array();
  for (std::size_t k = 0; k < report.drawn.size(); ++k) {
    per_k.push_back({{"k", k},
                     {"drawn", report.drawn[k]},
                     {"min_seen", optional_json(report.min_seen[k])},
                     {"packing_min", report.packing_min[k]}});
  }
  return {{"n", report.n},
          {"samples", report.samples},
          {"seed", report.seed},
          {"per_cardinality", per_k},
          {"violations", violations},
          {"ok", report.ok()}};
}

json to_json(const SegmentReport& report) {
  auto part = [](const SegmentPart& p) {
    json slack = json::array();
    for (const auto& s : p.min_slack) slack.push_back(s ? json(*s) : json(nullptr));
    return json{{"min_slack", slack}, {"sets_checked", p.sets_checked}, {"violations", p.violations}};
  };
  return {{"n", report.n},
          {"avoiding_diagonal", part(report.avoiding_diagonal)},
          {"containing_diagonal", part(report.containing_diagonal)},
          {"ok", report.ok()}};
}

json to_json(const std::vector<InspectionBoundsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"certified_exceeds", r.certified_exceeds},
                   {"upper", r.upper},
                   {"upper_verified", r.upper_verified},
                   {"exact", optional_json(r.exact)}});
  }
  return out;
}

std::string to_csv(const std::vector<InspectionBoundsRow>& rows) {
  std::ostringstream out;
  out << "n,certified_exceeds,upper,upper_verified,exact\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.certified_exceeds << ',' << r.upper << ','
        << (r.upper_verified ? "true" : "false") << ',';
    if (r.exact) out << *r.exact;
    out << '\n';
  }
  return out.str();
}

// -- frames --

std::string render_search_frames(const TriGrid& g, const SearchTrace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.searches.size(); ++t) {
    std::map<Coord, char> labels;
    for (const Coord v : trace.states[t].coords(g)) labels[v] = 'R';
    for (const Coord v : trace.searches[t].coords(g)) labels[v] = 'Y';
    out += "turn " + std::to_string(t + 1);
    if (t < trace.stages.size() && trace.stages[t] != 0) out += " (stage " + std::to_string(trace.stages[t]) + ")";
    out += '\n';
    out += render_ascii(g, labels, RowOrder::TopFirst, 'G');
    out += '\n';
  }
  return out;
}

std::string render_lion_frames(const TriGrid& g, const LionTrace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.positions.size(); ++t) {
    std::map<Coord, char> labels;
    for (const Coord v : trace.contaminated[t].coords(g)) labels[v] = 'R';
    for (const Coord v : trace.positions[t].positions) labels[v] = 'L';
    out += "turn " + std::to_string(t) + '\n';
    out += render_ascii(g, labels, RowOrder::TopFirst, 'G');
    out += '\n';
  }
  return out;
}

}  // namespace trigrid::io
