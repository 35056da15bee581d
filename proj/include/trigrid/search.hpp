#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigrid/grid.hpp"

namespace trigrid {

/// Raised when a stored trace cannot be replayed as written. Turns count from
/// 1; turn 0 flags a problem with the trace as a whole.
class TraceValidationError : public std::runtime_error {
 public:
  TraceValidationError(std::size_t turn, const std::string& what)
      : std::runtime_error("turn " + std::to_string(turn) + ": " + what), turn_(turn) {}
  std::size_t turn() const { return turn_; }

 private:
  std::size_t turn_;
};

/// Vertices that may still hold the intruder.
struct DirtyState {
  VertexSet dirty;
};

/// A searcher schedule together with the dirty set after every turn.
struct SearchTrace {
  int n = 0;
  std::size_t budget = 0;
  std::vector<VertexSet> searches;
  std::vector<VertexSet> states;  // states[t] = dirty set after searches[t]
  /// Which stage of the three-stage schedule emitted each turn (0 if unknown).
  std::vector<int> stages;

  std::size_t turns() const { return searches.size(); }
  std::size_t max_search_size() const;
};

/// One searcher turn: remove the searched vertices, then let the intruder stay
/// or move along one edge. Returns N(dirty \ s).
DirtyState step(const TriGrid& g, const DirtyState& dirty, const VertexSet& s);

/// Dirty sets after each search, starting from the full vertex set.
std::vector<VertexSet> replay_searches(const TriGrid& g, const std::vector<VertexSet>& searches);

/// ceil(3n/4) + 2.
std::size_t three_stage_budget(int n);

/// The row-sweep / L-sweep / column-sweep schedule with budget ceil(3n/4)+2.
/// For n <= 3 the row sweeps alone already clear the grid, and when the budget
/// covers every vertex a single full search is emitted.
SearchTrace three_stage_strategy(const TriGrid& g);

/// Replays `trace` from the full dirty set. Returns true iff the final dirty set
/// is empty. Throws TraceValidationError naming the first offending turn when a
/// search exceeds the budget, belongs to another grid, or a stored state
/// disagrees with the replay.
bool verify_trace(const TriGrid& g, const SearchTrace& trace);

/// Whether the empty dirty set is reachable with per-turn budget m, and in how
/// many turns (minimal).
std::optional<std::size_t> clearing_turns(const TriGrid& g, std::size_t m);

struct InspectionResult {
  std::optional<std::size_t> value;  // empty when max_m was exhausted
  std::vector<std::optional<std::size_t>> turns_by_budget;  // index m-1
};

inline constexpr int kExactInspectionOrderLimit = 4;

/// Least m in [1, max_m] for which the searcher can clear T_n. Requires n <= 4.
InspectionResult exact_inspection_number(const TriGrid& g, std::size_t max_m);

struct InspectionBoundsRow {
  int n = 0;
  /// Largest m with a lower-bound certificate, so the inspection number exceeds it.
  std::size_t certified_exceeds = 0;
  std::size_t upper = 0;
  bool upper_verified = false;
  std::optional<std::size_t> exact;
};

/// Bounds for every n in [1, n_max]; the exact solver runs for n <= exact_max_n.
std::vector<InspectionBoundsRow> inspection_bounds_report(int n_max, int exact_max_n = 3);

}  // namespace trigrid
