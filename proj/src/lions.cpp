#include "trigrid/lions.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace trigrid {

LionMove LionMove::single(std::size_t lions, std::size_t lion, Coord to) {
  LionMove move;
  move.destinations.assign(lions, std::nullopt);
  move.destinations.at(lion) = to;
  return move;
}

ContaminationState initial_contamination(const TriGrid& g, const LionConfig& start) {
  VertexSet occupied = g.empty_set();
  for (const Coord v : start.positions) occupied.insert(g, v);
  return {occupied.complement()};
}

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

std::pair<LionConfig, ContaminationState> lion_step(const TriGrid& g, const LionConfig& prev,
                                                    const LionMove& move,
                                                    const ContaminationState& cont) {
  if (move.destinations.size() != prev.positions.size()) {
    throw TraceValidationError(0, "move lists " + std::to_string(move.destinations.size()) +
                                      " lions but the configuration has " +
                                      std::to_string(prev.positions.size()));
  }
  LionConfig next = prev;
  std::vector<Edge> traversed;
  VertexSet occupied = g.empty_set();
  for (std::size_t i = 0; i < prev.positions.size(); ++i) {
    const Coord from = prev.positions[i];
    if (!g.contains(from)) throw TraceValidationError(0, "lion " + std::to_string(i) + " is off the grid");
    if (const auto& to = move.destinations[i]; to) {
      if (!g.contains(*to) || !g.adjacent(from, *to)) {
        throw TraceValidationError(0, "lion " + std::to_string(i) + " moves along a non-edge");
      }
      traversed.push_back(make_edge(g.id(from), g.id(*to)));
      next.positions[i] = *to;
    }
    occupied.insert(g, next.positions[i]);
  }

  const VertexSet& before = cont.contaminated;
  VertexSet after = g.empty_set();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (occupied.contains(v)) continue;
    bool reached = before.contains(v);
    for (const VertexId u : g.neighbor_ids(v)) {
      if (reached) break;
      if (!before.contains(u)) continue;
      const Edge e = make_edge(u, v);
      reached = std::find(traversed.begin(), traversed.end(), e) == traversed.end();
    }
    if (reached) after.insert(v);
  }
  return {std::move(next), ContaminationState{std::move(after)}};
}

LionTrace replay_lions(const TriGrid& g, const std::vector<Coord>& start,
                       const std::vector<LionMove>& moves) {
  LionTrace trace;
  trace.n = g.order();
  trace.lions = start.size();
  trace.start = start;
  trace.moves = moves;
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (!g.contains(start[i])) {
      throw TraceValidationError(0, "lion " + std::to_string(i) + " starts off the grid");
    }
  }
  LionConfig config{start};
  ContaminationState cont = initial_contamination(g, config);
  trace.positions.push_back(config);
  trace.contaminated.push_back(cont.contaminated);
  for (std::size_t t = 0; t < moves.size(); ++t) {
    try {
      auto [next, next_cont] = lion_step(g, config, moves[t], cont);
      config = std::move(next);
      cont = std::move(next_cont);
    } catch (const TraceValidationError& e) {
      // lion_step reports turn 0; re-anchor to the 1-based turn in this trace.
      std::string what = e.what();
      what = what.substr(what.find(": ") + 2);
      throw TraceValidationError(t + 1, what);
    }
    trace.positions.push_back(config);
    trace.contaminated.push_back(cont.contaminated);
  }
  return trace;
}

LionTrace column_sweep_strategy(const TriGrid& g) {
  const int n = g.order();
  const auto lions = static_cast<std::size_t>(n) + 1;
  std::vector<Coord> start;
  for (int r = 0; r <= n; ++r) start.push_back({0, r});
  std::vector<LionMove> moves;
  for (int c = 0; c < n; ++c) {
    // Lion r sits in row r; the top lion of each column stays on the diagonal.
    for (int r = 0; r <= n - c - 1; ++r) {
      moves.push_back(LionMove::single(lions, static_cast<std::size_t>(r), Coord{c + 1, r}));
    }
  }
  return replay_lions(g, start, moves);
}

bool column_sweep_invariant_holds(const TriGrid& g, const LionTrace& trace) {
  const int n = g.order();
  if (trace.lions != static_cast<std::size_t>(n) + 1) return false;
  std::size_t turn = 0;
  for (int c = 0; c < n; ++c) {
    turn += static_cast<std::size_t>(n - c);
    if (turn >= trace.positions.size()) return false;
    const auto& cont = trace.contaminated[turn];
    for (const Coord v : cont.coords(g)) {
      if (v.col <= c + 1) return false;
    }
    const auto& pos = trace.positions[turn].positions;
    for (int r = 0; r <= n; ++r) {
      if (pos[static_cast<std::size_t>(r)] != Coord{std::min(c + 1, n - r), r}) return false;
    }
  }
  return true;
}

namespace {

VertexSet occupancy(const TriGrid& g, const LionConfig& config) {
  VertexSet s = g.empty_set();
  for (const Coord v : config.positions) s.insert(g, v);
  return s;
}

}  // namespace

SearchTrace couple_to_search(const TriGrid& g, const LionTrace& trace) {
  if (!trace.winning()) throw std::invalid_argument("lion trace does not clear the grid; refusing to couple");
  SearchTrace out;
  out.n = g.order();
  out.budget = 2 * trace.lions;
  VertexSet previous = g.empty_set();
  for (const auto& config : trace.positions) {
    const VertexSet current = occupancy(g, config);
    out.searches.push_back(previous | current);
    out.stages.push_back(0);
    previous = current;
  }
  out.states = replay_searches(g, out.searches);
  return out;
}

ClaimReport claim_check(const TriGrid& g, const LionTrace& trace) {
  ClaimReport report;
  // Intruder candidates right before each search; the full set before the first.
  VertexSet before_search = g.full_set();
  VertexSet previous = g.empty_set();
  for (std::size_t k = 0; k < trace.positions.size(); ++k) {
    const VertexSet current = occupancy(g, trace.positions[k]);
    const VertexSet searched = previous | current;
    const VertexSet after_search = before_search - searched;
    const VertexSet lion_clear = trace.contaminated[k].complement();   // C_k
    const VertexSet search_clear = after_search.complement();          // I_k
    if (!lion_clear.is_subset_of(search_clear)) {
      report.holds = false;
      report.first_failure = k;
      return report;
    }
    before_search = neighborhood(g, after_search);
    previous = current;
  }
  return report;
}

LionTrace random_lion_walk(const TriGrid& g, std::size_t lions, std::size_t turns,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto count = static_cast<std::uint64_t>(g.vertex_count());
  std::vector<Coord> start;
  for (std::size_t i = 0; i < lions; ++i) start.push_back(g.coord(static_cast<VertexId>(rng() % count)));
  std::vector<LionMove> moves;
  std::vector<Coord> pos = start;
  for (std::size_t t = 0; t < turns; ++t) {
    LionMove move;
    for (std::size_t i = 0; i < lions; ++i) {
      const auto& adj = g.neighbor_ids(g.id(pos[i]));
      const std::uint64_t choice = rng() % (adj.size() + 1);
      if (choice == 0) {
        move.destinations.emplace_back(std::nullopt);
      } else {
        pos[i] = g.coord(adj[choice - 1]);
        move.destinations.emplace_back(pos[i]);
      }
    }
    moves.push_back(std::move(move));
  }
  return replay_lions(g, start, moves);
}

// -- exact solver --

namespace {

// The six symmetries of the triangle in shifted coordinates.
Coord symmetry(int which, Coord v, int n) {
  const int z = n - v.col - v.row;
  switch (which) {
    case 0: return v;
    case 1: return {v.row, v.col};
    case 2: return {z, v.row};
    case 3: return {v.col, z};
    case 4: return {v.row, z};
    default: return {z, v.col};
  }
}

struct LionSolver {
  const TriGrid& g;
  std::size_t lions;
  std::vector<std::uint64_t> adjacency;  // neighbour mask per id

  explicit LionSolver(const TriGrid& grid, std::size_t l) : g(grid), lions(l) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::uint64_t m = 0;
      for (const VertexId u : g.neighbor_ids(v)) m |= std::uint64_t{1} << u;
      adjacency.push_back(m);
    }
  }

  // Sorted position ids in 4-bit fields below the contamination mask.
  std::uint64_t encode(const std::vector<VertexId>& pos, std::uint64_t cont) const {
    std::uint64_t key = cont;
    for (const VertexId p : pos) key = (key << 4) | p;
    return key;
  }

  std::uint64_t step(const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                     std::uint64_t cont) const {
    std::uint64_t occupied = 0;
    for (const VertexId p : to) occupied |= std::uint64_t{1} << p;
    std::uint64_t out = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (occupied & bit) continue;
      if (cont & bit) {
        out |= bit;
        continue;
      }
      std::uint64_t sources = adjacency[v] & cont;
      for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] != to[i] && (from[i] == v || to[i] == v)) {
          const VertexId other = from[i] == v ? to[i] : from[i];
          sources &= ~(std::uint64_t{1} << other);
        }
      }
      if (sources != 0) out |= bit;
    }
    return out;
  }

  // Minimal number of turns to clear from this placement, if it can be done.
  std::optional<std::size_t> solve(const std::vector<VertexId>& start) const {
    std::uint64_t cont = (std::uint64_t{1} << g.vertex_count()) - 1;
    for (const VertexId p : start) cont &= ~(std::uint64_t{1} << p);
    if (cont == 0) return 0;
    using State = std::pair<std::vector<VertexId>, std::uint64_t>;
    std::unordered_set<std::uint64_t> seen{encode(start, cont)};
    std::vector<State> frontier{{start, cont}};
    for (std::size_t depth = 1; !frontier.empty(); ++depth) {
      std::vector<State> next;
      for (const auto& [pos, c] : frontier) {
        std::vector<std::vector<VertexId>> options(lions);
        for (std::size_t i = 0; i < lions; ++i) {
          options[i].push_back(pos[i]);
          for (const VertexId u : g.neighbor_ids(pos[i])) options[i].push_back(u);
        }
        std::vector<std::size_t> pick(lions, 0);
        while (true) {
          std::vector<VertexId> to(lions);
          for (std::size_t i = 0; i < lions; ++i) to[i] = options[i][pick[i]];
          const std::uint64_t nc = step(pos, to, c);
          if (nc == 0) return depth;
          std::sort(to.begin(), to.end());
          if (seen.insert(encode(to, nc)).second) next.push_back({to, nc});
          std::size_t i = 0;
          while (i < lions && ++pick[i] == options[i].size()) pick[i++] = 0;
          if (i == lions) break;
        }
      }
      frontier = std::move(next);
    }
    return std::nullopt;
  }
};

// Sorted multisets of `lions` vertex ids, canonical under the triangle symmetries.
std::vector<std::vector<VertexId>> canonical_placements(const TriGrid& g, std::size_t lions) {
  std::vector<std::vector<VertexId>> out;
  const auto count = static_cast<VertexId>(g.vertex_count());
  std::vector<VertexId> cur(lions, 0);
  while (true) {
    bool canonical = true;
    for (int s = 1; s < 6 && canonical; ++s) {
      std::vector<VertexId> image;
      for (const VertexId p : cur) image.push_back(g.id(symmetry(s, g.coord(p), g.order())));
      std::sort(image.begin(), image.end());
      if (image < cur) canonical = false;
    }
    if (canonical) out.push_back(cur);
    // next non-decreasing tuple
    std::size_t i = lions;
    while (i > 0 && cur[i - 1] == count - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < lions; ++j) cur[j] = cur[i - 1];
  }
  return out;
}

}  // namespace

LionNumberResult exact_lion_number(const TriGrid& g, std::size_t max_l) {
  if (g.order() > kExactLionOrderLimit) {
    throw std::invalid_argument("exact lion solver is limited to n <= " +
                                std::to_string(kExactLionOrderLimit));
  }
  if (max_l > 14) throw std::invalid_argument("exact lion solver supports at most 14 lions");
  LionNumberResult result;
  for (std::size_t l = 1; l <= max_l; ++l) {
    const LionSolver solver(g, l);
    std::optional<std::size_t> best;
    std::vector<VertexId> best_start;
    for (const auto& start : canonical_placements(g, l)) {
      const auto turns = solver.solve(start);
      if (turns && (!best || *turns < *best)) {
        best = turns;
        best_start = start;
      }
    }
    result.winning_by_count.push_back(best.has_value());
    if (best) {
      result.value = l;
      result.turns = *best;
      for (const VertexId p : best_start) result.start.push_back(g.coord(p));
      break;
    }
  }
  return result;
}

}  // namespace trigrid
