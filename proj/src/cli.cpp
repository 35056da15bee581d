#include "trigrid/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "trigrid/compression.hpp"
#include "trigrid/io.hpp"
#include "trigrid/isoperimetry.hpp"
#include "trigrid/lions.hpp"
#include "trigrid/order.hpp"
#include "trigrid/search.hpp"

namespace trigrid::cli {

using nlohmann::json;

namespace {

bool is_search_sub(const std::string& s) {
  return s == "simulate" || s == "exact" || s == "bounds" || s == "verify";
}
bool is_lions_sub(const std::string& s) { return s == "simulate" || s == "couple" || s == "exact"; }

void require(bool cond, const std::string& reason) {
  if (!cond) throw UsageError(reason);
}

void require_n(const RunConfig& c) { require(c.n >= 1, "--n must be at least 1"); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// A set file is either a bare [[c, r], ...] array or an object with a "set" member.
VertexSet read_set(const TriGrid& g, const std::string& path) {
  const json j = read_json_file(path);
  try {
    return io::vertex_set_from_json(g, j.is_object() ? j.at("set") : j);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::map<Coord, char> set_labels(const TriGrid& g, const VertexSet& s, char glyph) {
  std::map<Coord, char> labels;
  for (const Coord v : s.coords(g)) labels[v] = glyph;
  return labels;
}

RowOrder row_order(const RunConfig& c) { return c.bottom_first ? RowOrder::BottomFirst : RowOrder::TopFirst; }

json config_json(const RunConfig& c) {
  return {{"command", c.command},
          {"subcommand", c.subcommand},
          {"n", c.n},
          {"n_max", c.n_max},
          {"k", c.k},
          {"kind", c.kind},
          {"axis", c.axis},
          {"side", c.side},
          {"set", c.set_path},
          {"trace", c.trace_path},
          {"exhaustive", c.exhaustive},
          {"allow_n6", c.allow_n6},
          {"segments", c.segments},
          {"samples", c.samples},
          {"seed", c.seed},
          {"max_m", c.max_m},
          {"max_l", c.max_l},
          {"exact_max_n", c.exact_max_n},
          {"render", c.render},
          {"bottom_first", c.bottom_first},
          {"format", c.format},
          {"out", c.out},
          {"threads", c.threads}};
}

// -- commands --

void run_isoperimetry(const RunConfig& c, Report& r) {
  const TriGrid g(c.n);
  json payload = {{"n", c.n}};
  std::string csv;
  if (c.exhaustive) {
    ExhaustiveOptions opts;
    opts.max_order = c.allow_n6 ? kExhaustiveHardLimit : 5;
    opts.threads = c.threads;
    const auto table = exhaustive_min_boundary(g, opts);
    payload["exhaustive"] = io::to_json(table);
    csv = io::to_csv(table);
    r.verified = r.verified && table.all_verified();
  }
  if (c.samples > 0) {
    const auto report = sampled_check(g, c.samples, c.seed);
    payload["sampled"] = io::to_json(report, g);
    r.verified = r.verified && report.ok();
    if (csv.empty()) {
      std::ostringstream out;
      out << "k,drawn,min_seen,packing_min\n";
      for (std::size_t k = 0; k < report.drawn.size(); ++k) {
        out << k << ',' << report.drawn[k] << ',';
        if (report.min_seen[k]) out << *report.min_seen[k];
        out << ',' << report.packing_min[k] << '\n';
      }
      csv = out.str();
    }
  }
  if (c.segments) {
    const auto report = segment_minimality_check(g);
    payload["segments"] = io::to_json(report);
    r.verified = r.verified && report.ok();
  }
  r.payload = payload;
  r.text = csv;
}

void run_packing(const RunConfig& c, Report& r) {
  const TriGrid g(c.n);
  const bool initial = c.kind == "initial";
  const VertexSet s = initial ? initial_segment(g, c.k) : final_segment(g, c.k);
  const std::size_t b = boundary(g, s).size();
  json closed = nullptr;
  try {
    closed = initial ? initial_segment_boundary_size(g, c.k) : final_segment_boundary_size(g, c.k);
  } catch (const std::out_of_range&) {
  }
  if (!closed.is_null() && closed.get<std::size_t>() != b) r.verified = false;
  r.payload = {{"n", c.n},
               {"k", c.k},
               {"kind", c.kind},
               {"set", io::to_json(g, s)},
               {"boundary", b},
               {"closed_form", closed},
               {"packing_min", packing_minimum(g, c.k)}};
  r.text = render_ascii(g, set_labels(g, s, '#'), row_order(c));
}

void run_compress(const RunConfig& c, Report& r) {
  const TriGrid g(c.n);
  const VertexSet a = read_set(g, c.set_path);
  const Axis axis = axis_from_int(c.axis);
  const Side side = c.side == "left" ? Side::Left : Side::Right;
  const VertexSet out = compress(g, a, axis, side);
  const std::size_t before = boundary(g, a).size();
  const std::size_t after = boundary(g, out).size();
  r.verified = after <= before && out.size() == a.size() && is_compressed(g, out, axis, side);
  r.payload = {{"n", c.n},
               {"axis", c.axis},
               {"side", c.side},
               {"input", io::to_json(g, a)},
               {"set", io::to_json(g, out)},
               {"boundary_before", before},
               {"boundary_after", after}};
  r.text = render_ascii(g, set_labels(g, out, '#'), row_order(c));
}

void search_trace_report(const TriGrid& g, const SearchTrace& trace, const RunConfig& c, Report& r) {
  bool cleared = false;
  try {
    cleared = verify_trace(g, trace);
  } catch (const TraceValidationError& e) {
    r.payload = {{"error", e.what()}, {"turn", e.turn()}};
    r.verified = false;
    return;
  }
  r.verified = cleared;
  r.payload = io::to_json(g, trace);
  r.text = io::render_search_frames(g, trace);
  if (c.render) r.payload["frames"] = r.text;
}

SearchTrace load_search_trace(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return io::search_trace_from_json(j);
  } catch (const TraceValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

LionTrace load_lion_trace(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return io::lion_trace_from_json(j);
  } catch (const TraceValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void run_search(const RunConfig& c, Report& r) {
  if (c.subcommand == "simulate") {
    const TriGrid g(c.n);
    search_trace_report(g, three_stage_strategy(g), c, r);
  } else if (c.subcommand == "exact") {
    const TriGrid g(c.n);
    const auto result = exact_inspection_number(g, c.max_m);
    json turns = json::array();
    for (const auto& t : result.turns_by_budget) turns.push_back(t ? json(*t) : json(nullptr));
    r.payload = {{"n", c.n},
                 {"max_m", c.max_m},
                 {"value", result.value ? json(*result.value) : json(nullptr)},
                 {"turns_by_budget", turns}};
  } else if (c.subcommand == "bounds") {
    const auto rows = inspection_bounds_report(c.n_max, c.exact_max_n);
    bool ok = true;
    for (const auto& row : rows) ok = ok && row.upper_verified;
    r.verified = ok;
    r.payload = {{"n_max", c.n_max}, {"rows", io::to_json(rows)}};
    r.text = io::to_csv(rows);
  } else {
    SearchTrace trace;
    try {
      trace = load_search_trace(c.trace_path);
    } catch (const TraceValidationError& e) {
      r.payload = {{"error", e.what()}, {"turn", e.turn()}};
      r.verified = false;
      return;
    }
    search_trace_report(TriGrid(trace.n), trace, c, r);
  }
}

void run_lions(const RunConfig& c, Report& r) {
  if (c.subcommand == "simulate") {
    const TriGrid g(c.n);
    const LionTrace trace = column_sweep_strategy(g);
    r.verified = trace.winning() && column_sweep_invariant_holds(g, trace);
    r.payload = io::to_json(g, trace);
    r.text = io::render_lion_frames(g, trace);
    if (c.render) r.payload["frames"] = r.text;
  } else if (c.subcommand == "couple") {
    LionTrace trace;
    try {
      trace = load_lion_trace(c.trace_path);
    } catch (const TraceValidationError& e) {
      r.payload = {{"error", e.what()}, {"turn", e.turn()}};
      r.verified = false;
      return;
    }
    const TriGrid g(trace.n);
    const ClaimReport claim = claim_check(g, trace);
    json claim_json = {{"holds", claim.holds},
                       {"first_failure", claim.first_failure ? json(*claim.first_failure) : json(nullptr)}};
    if (!trace.winning()) {
      r.verified = false;
      r.payload = {{"claim", claim_json}, {"error", "lion trace does not clear the grid"}};
      return;
    }
    const SearchTrace coupled = couple_to_search(g, trace);
    bool cleared = false;
    try {
      cleared = verify_trace(g, coupled);
    } catch (const TraceValidationError&) {
      cleared = false;
    }
    r.verified = claim.holds && cleared;
    r.payload = {{"claim", claim_json}, {"search", io::to_json(g, coupled)}};
    r.text = io::render_search_frames(g, coupled);
    if (c.render) r.payload["frames"] = r.text;
  } else {
    const TriGrid g(c.n);
    const auto result = exact_lion_number(g, c.max_l);
    json start = json::array();
    for (const Coord v : result.start) start.push_back(json::array({v.col, v.row}));
    r.payload = {{"n", c.n},
                 {"max_l", c.max_l},
                 {"value", result.value ? json(*result.value) : json(nullptr)},
                 {"winning_by_count", result.winning_by_count},
                 {"start", start},
                 {"turns", result.turns}};
  }
}

void run_render(const RunConfig& c, Report& r) {
  if (!c.trace_path.empty()) {
    const json j = read_json_file(c.trace_path);
    try {
      if (j.contains("lions")) {
        const LionTrace trace = io::lion_trace_from_json(j);
        r.text = io::render_lion_frames(TriGrid(trace.n), trace);
      } else {
        const SearchTrace trace = io::search_trace_from_json(j);
        r.text = io::render_search_frames(TriGrid(trace.n), trace);
      }
    } catch (const TraceValidationError& e) {
      r.payload = {{"error", e.what()}, {"turn", e.turn()}};
      r.verified = false;
      return;
    } catch (const std::exception& e) {
      throw UsageError(c.trace_path + ": " + e.what());
    }
  } else {
    const TriGrid g(c.n);
    r.text = render_ascii(g, set_labels(g, read_set(g, c.set_path), '#'), row_order(c));
  }
  r.payload = {{"frames", r.text}};
}

void write_output(const RunConfig& c, const std::string& body, std::ostream& out) {
  if (c.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw IoError("cannot open " + c.out + " for writing");
  file << body;
  if (!file) throw IoError("write to " + c.out + " failed");
}

}  // namespace

json Report::to_json() const {
  return {{"command", command},
          {"config", config},
          {"version", version},
          {"payload", payload},
          {"duration_ms", duration_ms},
          {"ok", verified}};
}

void validate(const RunConfig& c) {
  const std::string& cmd = c.command;
  require(c.format == "json" || c.format == "csv" || c.format == "ascii",
          "--format must be json, csv or ascii");
  require(c.threads >= 1 && c.threads <= 256, "--threads must be in [1, 256]");
  if (cmd == "verify-isoperimetry") {
    require_n(c);
    require(c.exhaustive || c.samples > 0 || c.segments, "choose --exhaustive, --samples S or --segments");
    if (c.exhaustive) {
      const int limit = c.allow_n6 ? kExhaustiveHardLimit : 5;
      require(c.n <= limit, "--exhaustive supports n <= " + std::to_string(limit) +
                                (c.allow_n6 ? "" : " (pass --allow-n6 for n = 6)"));
    }
    if (c.samples > 0) require(c.n <= kSampledOrderLimit, "--samples supports n <= 30");
    if (c.segments) require(c.n <= kSegmentOrderLimit, "--segments supports n <= 4");
    require(c.format != "ascii", "verify-isoperimetry has no ascii output");
    require(c.format != "csv" || c.exhaustive || c.samples > 0, "csv output needs --exhaustive or --samples");
  } else if (cmd == "packing") {
    require_n(c);
    require(c.kind == "initial" || c.kind == "final", "--kind must be initial or final");
    const std::size_t v = static_cast<std::size_t>(c.n + 1) * static_cast<std::size_t>(c.n + 2) / 2;
    require(c.k <= v, "--k exceeds the vertex count " + std::to_string(v));
    require(c.format != "csv", "packing has no csv output");
  } else if (cmd == "compress") {
    require_n(c);
    require(c.axis == 1 || c.axis == 2, "--axis must be 1 or 2");
    require(c.side == "left" || c.side == "right", "--side must be left or right");
    require(!c.set_path.empty(), "--set FILE is required");
    require(c.format != "csv", "compress has no csv output");
  } else if (cmd == "search") {
    require(is_search_sub(c.subcommand), "search needs simulate, exact, bounds or verify");
    if (c.subcommand == "simulate") {
      require_n(c);
      require(c.n <= 200, "search simulate supports n <= 200");
    } else if (c.subcommand == "exact") {
      require_n(c);
      require(c.n <= kExactInspectionOrderLimit, "search exact supports n <= 4");
      require(c.max_m >= 1, "--max-m must be at least 1");
    } else if (c.subcommand == "bounds") {
      require(c.n_max >= 1 && c.n_max <= 50, "--n-max must be in [1, 50]");
      require(c.exact_max_n >= 0 && c.exact_max_n <= kExactInspectionOrderLimit, "--exact-max-n must be in [0, 4]");
    } else {
      require(!c.trace_path.empty(), "--trace FILE is required");
    }
    require(c.format != "csv" || c.subcommand == "bounds", "only search bounds has csv output");
    require(c.format != "ascii" || c.subcommand == "simulate" || c.subcommand == "verify",
            "ascii output needs a search trace");
  } else if (cmd == "lions") {
    require(is_lions_sub(c.subcommand), "lions needs simulate, couple or exact");
    if (c.subcommand == "simulate") {
      require_n(c);
      require(c.n <= 200, "lions simulate supports n <= 200");
    } else if (c.subcommand == "exact") {
      require_n(c);
      require(c.n <= kExactLionOrderLimit, "lions exact supports n <= 2");
      require(c.max_l >= 1 && c.max_l <= 14, "--max-l must be in [1, 14]");
    } else {
      require(!c.trace_path.empty(), "--trace FILE is required");
    }
    require(c.format != "csv", "lions has no csv output");
    require(c.format != "ascii" || c.subcommand != "exact", "lions exact has no ascii output");
  } else if (cmd == "render") {
    require(!c.trace_path.empty() || !c.set_path.empty(), "render needs --trace FILE or --set FILE");
    require(c.trace_path.empty() || c.set_path.empty(), "render takes --trace or --set, not both");
    if (!c.set_path.empty()) require_n(c);
    require(c.format != "csv", "render has no csv output");
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
}

Report dispatch(const RunConfig& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = c.subcommand.empty() ? c.command : c.command + " " + c.subcommand;
  r.config = config_json(c);
  if (c.command == "verify-isoperimetry") {
    run_isoperimetry(c, r);
  } else if (c.command == "packing") {
    run_packing(c, r);
  } else if (c.command == "compress") {
    run_compress(c, r);
  } else if (c.command == "search") {
    run_search(c, r);
  } else if (c.command == "lions") {
    run_lions(c, r);
  } else if (c.command == "render") {
    run_render(c, r);
  } else {
    throw UsageError("unknown command '" + c.command + "'");
  }
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Isoperimetry and pursuit-evasion on triangular grids", "trigrid"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.add_option("--format", c.format, "json | csv | ascii")->default_val("json");
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--seed", c.seed, "RNG seed for sampled checks");
  app.add_option("--threads", c.threads, "worker threads for exhaustive enumeration");

  auto n_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--n", c.n, "grid order");
    if (required) o->required();
  };
  auto rows_flag = [&](CLI::App* sub) {
    sub->add_flag("--bottom-first", c.bottom_first, "print row 0 first");
  };

  auto* iso = app.add_subcommand("verify-isoperimetry", "minimum boundary against the packing minimum");
  n_opt(iso, true);
  iso->add_flag("--exhaustive", c.exhaustive, "enumerate every subset");
  iso->add_flag("--allow-n6", c.allow_n6, "permit the exhaustive run at n = 6");
  iso->add_option("--samples", c.samples, "number of random subsets");
  iso->add_flag("--segments", c.segments, "exhaustive diagonal-avoiding/containing segment check (n <= 4)");

  auto* pack = app.add_subcommand("packing", "initial or final segment of the simplicial order");
  n_opt(pack, true);
  pack->add_option("--k", c.k, "segment size")->required();
  pack->add_option("--kind", c.kind, "initial | final");
  rows_flag(pack);

  auto* comp = app.add_subcommand("compress", "apply one compression to a vertex set");
  n_opt(comp, true);
  comp->add_option("--axis", c.axis, "1 | 2");
  comp->add_option("--side", c.side, "left | right");
  comp->add_option("--set", c.set_path, "JSON vertex set")->required();
  rows_flag(comp);

  auto* search = app.add_subcommand("search", "zero-visibility search");
  search->require_subcommand(1);
  auto* s_sim = search->add_subcommand("simulate", "three-stage strategy trace");
  n_opt(s_sim, true);
  s_sim->add_flag("--render", c.render, "include ASCII frames");
  auto* s_exact = search->add_subcommand("exact", "exact inspection number (n <= 4)");
  n_opt(s_exact, true);
  s_exact->add_option("--max-m", c.max_m, "largest budget tried")->required();
  auto* s_bounds = search->add_subcommand("bounds", "lower and upper bounds table");
  s_bounds->add_option("--n-max", c.n_max, "largest order")->required();
  s_bounds->add_option("--exact-max-n", c.exact_max_n, "run the exact solver up to this order");
  auto* s_verify = search->add_subcommand("verify", "replay a stored search trace");
  s_verify->add_option("--trace", c.trace_path, "trace JSON")->required();
  s_verify->add_flag("--render", c.render, "include ASCII frames");

  auto* lions = app.add_subcommand("lions", "lions and contamination");
  lions->require_subcommand(1);
  auto* l_sim = lions->add_subcommand("simulate", "column sweep trace");
  n_opt(l_sim, true);
  l_sim->add_flag("--render", c.render, "include ASCII frames");
  auto* l_couple = lions->add_subcommand("couple", "couple a lion trace to a searcher and check the claim");
  l_couple->add_option("--trace", c.trace_path, "lion trace JSON")->required();
  l_couple->add_flag("--render", c.render, "include ASCII frames");
  auto* l_exact = lions->add_subcommand("exact", "exact lion number (n <= 2)");
  n_opt(l_exact, true);
  l_exact->add_option("--max-l", c.max_l, "largest lion count tried")->required();

  auto* render = app.add_subcommand("render", "ASCII frames for a trace or a set");
  render->add_option("--trace", c.trace_path, "search or lion trace JSON");
  render->add_option("--set", c.set_path, "JSON vertex set");
  n_opt(render, false);
  rows_flag(render);

  for (auto* sub : {iso, pack, comp, search, s_sim, s_exact, s_bounds, s_verify, lions, l_sim, l_couple, l_exact,
                    render}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (auto* leaf : sub->get_subcommands()) c.subcommand = leaf->get_name();
  }

  try {
    validate(c);
    Report report = dispatch(c);
    std::string body;
    if (c.format == "json") {
      body = report.to_json().dump(2) + '\n';
    } else {
      body = report.text;
    }
    write_output(c, body, out);
    if (!report.verified) {
      err << "verification failed: " << report.command << '\n';
      return kVerificationFailed;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace trigrid::cli
