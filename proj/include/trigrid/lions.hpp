#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trigrid/grid.hpp"
#include "trigrid/search.hpp"

namespace trigrid {

/// Lion positions, one entry per lion. Several lions may share a vertex.
struct LionConfig {
  std::vector<Coord> positions;
};

/// Per lion: std::nullopt to stay, otherwise an adjacent destination.
struct LionMove {
  std::vector<std::optional<Coord>> destinations;

  static LionMove single(std::size_t lions, std::size_t lion, Coord to);
};

struct ContaminationState {
  VertexSet contaminated;
};

/// A lion schedule with the derived positions and contamination per turn.
/// Index 0 of `positions` / `contaminated` is the initial placement.
struct LionTrace {
  int n = 0;
  std::size_t lions = 0;
  std::vector<Coord> start;
  std::vector<LionMove> moves;
  std::vector<LionConfig> positions;
  std::vector<VertexSet> contaminated;

  bool winning() const { return !contaminated.empty() && contaminated.back().empty(); }
  std::size_t turns() const { return moves.size(); }
};

/// Every vertex without a lion.
ContaminationState initial_contamination(const TriGrid& g, const LionConfig& start);

/// One simultaneous turn. A vertex is contaminated afterwards iff it holds no
/// lion and it was contaminated, or a contaminated neighbour reaches it over an
/// edge no lion traversed this turn (edges block in both directions).
/// Throws TraceValidationError(0, ...) on a move along a non-edge.
std::pair<LionConfig, ContaminationState> lion_step(const TriGrid& g, const LionConfig& prev,
                                                    const LionMove& move,
                                                    const ContaminationState& cont);

/// Replays `moves` from `start`, filling in positions and contamination.
/// Throws TraceValidationError naming the first illegal turn.
LionTrace replay_lions(const TriGrid& g, const std::vector<Coord>& start,
                       const std::vector<LionMove>& moves);

/// n+1 lions on column 0; column by column, the lions below the diagonal step
/// one column right, one lion per turn from row 0 upward.
LionTrace column_sweep_strategy(const TriGrid& g);

/// After finishing column c (c = 0..n-1), columns 0..c+1 hold no contamination
/// and lion r sits at (min(c+1, n-r), r). Checked at every column boundary of
/// a column_sweep_strategy trace.
bool column_sweep_invariant_holds(const TriGrid& g, const LionTrace& trace);

/// Searcher schedule P(0), P(0) ∪ P(1), ..., P(K-1) ∪ P(K) with budget 2L.
/// Throws std::invalid_argument for a trace that does not clear the grid.
SearchTrace couple_to_search(const TriGrid& g, const LionTrace& trace);

struct ClaimReport {
  bool holds = true;
  std::optional<std::size_t> first_failure;  // turn index k
};

/// Lockstep replay of the lion trace and its coupled searcher. With C_k the
/// lion-cleared vertices after turn k and I_k the vertices that cannot hold
/// the intruder right after the k-th search, checks C_k ⊆ I_k for every k.
/// Works for non-winning traces as well.
ClaimReport claim_check(const TriGrid& g, const LionTrace& trace);

/// A legal random walk: each turn every lion stays or moves to a uniformly
/// chosen neighbour. Deterministic for a given seed.
LionTrace random_lion_walk(const TriGrid& g, std::size_t lions, std::size_t turns,
                           std::uint64_t seed);

struct LionNumberResult {
  std::optional<std::size_t> value;
  std::vector<bool> winning_by_count;  // index l-1, up to the first winning count
  /// Winning initial placement and move count for the reported value.
  std::vector<Coord> start;
  std::size_t turns = 0;
};

inline constexpr int kExactLionOrderLimit = 2;

/// Least l in [1, max_l] for which some initial placement of l lions clears
/// T_n. Requires n <= 2.
LionNumberResult exact_lion_number(const TriGrid& g, std::size_t max_l);

}  // namespace trigrid
