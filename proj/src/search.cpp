#include "trigrid/search.hpp"

#include <algorithm>
#include <bit>

#include "trigrid/isoperimetry.hpp"
#include "trigrid/order.hpp"

namespace trigrid {

std::size_t SearchTrace::max_search_size() const {
  std::size_t out = 0;
  for (const auto& s : searches) out = std::max(out, s.size());
  return out;
}

DirtyState step(const TriGrid& g, const DirtyState& dirty, const VertexSet& s) {
  return {neighborhood(g, dirty.dirty - s)};
}

std::vector<VertexSet> replay_searches(const TriGrid& g, const std::vector<VertexSet>& searches) {
  std::vector<VertexSet> states;
  states.reserve(searches.size());
  DirtyState current{g.full_set()};
  for (const auto& s : searches) {
    current = step(g, current, s);
    states.push_back(current.dirty);
  }
  return states;
}

std::size_t three_stage_budget(int n) {
  return static_cast<std::size_t>((3 * n + 3) / 4 + 2);
}

namespace {

void append_row(std::vector<Coord>& out, int row, int first_col, int last_col) {
  for (int c = first_col; c <= last_col; ++c) out.push_back({c, row});
}

}  // namespace

SearchTrace three_stage_strategy(const TriGrid& g) {
  const int n = g.order();
  const auto k = static_cast<int>(three_stage_budget(n));
  SearchTrace trace;
  trace.n = n;
  trace.budget = static_cast<std::size_t>(k);
  auto add = [&](const std::vector<Coord>& vertices, int stage) {
    trace.searches.push_back(VertexSet::from_coords(g, vertices));
    trace.stages.push_back(stage);
  };

  if (static_cast<std::size_t>(k) >= g.vertex_count()) {
    add(g.full_set().coords(g), 1);
  } else {
    // Rows strictly above `a` are cleared by the row sweeps; columns below `a`
    // by the L-shaped sweeps, the rest by column sweeps.
    const int a = n - k + 2;

    // Stage 1: clear row r from the left, using row r-1 as a moving shield.
    for (int r = n; r >= std::max(a + 1, 1); --r) {
      const int h = n - r + 1;
      for (int j = 1; j <= h; ++j) {
        std::vector<Coord> s;
        append_row(s, r, j - 1, h - 1);
        append_row(s, r - 1, 0, j);
        add(s, 1);
      }
    }

    if (a >= 1) {
      // Stage 2: path along row a from column 2a down to column a+1, then down
      // column a to row 0 (2a+1 vertices, 1-based as in the schedule).
      std::vector<Coord> path;
      for (int c = 2 * a; c >= a + 1; --c) path.push_back({c, a});
      for (int r = a; r >= 0; --r) path.push_back({a, r});
      for (int j = 1; j <= a; ++j) {
        std::vector<Coord> s;
        append_row(s, a + 1 - j, 0, a - 1);
        append_row(s, a - j, 0, a - 1);
        for (int p = j; p <= j + a + 1; ++p) s.push_back(path[static_cast<std::size_t>(p - 1)]);
        add(s, 2);
      }

      // Stage 3: clear column c from the top, using column c+1 as the shield.
      for (int c = a; c <= n - 1; ++c) {
        const int h = n - c + 1;
        for (int j = 1; j <= h - 1; ++j) {
          std::vector<Coord> s;
          // column c, top-down positions j..h are rows (n-c-j+1) .. 0
          for (int r = n - c - j + 1; r >= 0; --r) s.push_back({c, r});
          // column c+1, top-down positions 1..j are rows (n-c-1) .. (n-c-j)
          for (int r = n - c - 1; r >= n - c - j; --r) s.push_back({c + 1, r});
          add(s, 3);
        }
      }
    }
  }

  trace.states = replay_searches(g, trace.searches);
  return trace;
}

bool verify_trace(const TriGrid& g, const SearchTrace& trace) {
  if (trace.n != g.order()) throw TraceValidationError(0, "trace is for a different grid order");
  if (!trace.states.empty() && trace.states.size() != trace.searches.size()) {
    throw TraceValidationError(0, "stored state count does not match the number of searches");
  }
  DirtyState current{g.full_set()};
  for (std::size_t t = 0; t < trace.searches.size(); ++t) {
    const VertexSet& s = trace.searches[t];
    if (s.order() != g.order() || s.capacity() != g.vertex_count()) {
      throw TraceValidationError(t + 1, "search set does not belong to the grid");
    }
    if (s.size() > trace.budget) {
      throw TraceValidationError(t + 1, "search of " + std::to_string(s.size()) +
                                        " vertices exceeds the budget of " +
                                        std::to_string(trace.budget));
    }
    current = step(g, current, s);
    if (!trace.states.empty() && !(trace.states[t] == current.dirty)) {
      throw TraceValidationError(t + 1, "stored dirty set disagrees with the replay");
    }
  }
  return current.dirty.empty();
}

// -- exact solver --

namespace {

// Deposits the low bits of `compact` into the set positions of `positions`.
std::uint64_t expand(std::uint64_t compact, const std::vector<int>& positions) {
  std::uint64_t out = 0;
  while (compact != 0) {
    out |= std::uint64_t{1} << positions[static_cast<std::size_t>(std::countr_zero(compact))];
    compact &= compact - 1;
  }
  return out;
}

class DominanceSet {
 public:
  explicit DominanceSet(std::size_t bits) : bits_(bits), marked_(std::size_t{1} << bits, false) {}

  bool dominated(std::uint64_t mask) const { return marked_[mask]; }

  // Marks `mask` and all of its supersets; the marked family stays up-closed.
  void mark_up(std::uint64_t mask) {
    std::vector<std::uint64_t> stack{mask};
    while (!stack.empty()) {
      const std::uint64_t x = stack.back();
      stack.pop_back();
      if (marked_[x]) continue;
      marked_[x] = true;
      for (std::size_t b = 0; b < bits_; ++b) {
        const std::uint64_t y = x | (std::uint64_t{1} << b);
        if (y != x && !marked_[y]) stack.push_back(y);
      }
    }
  }

 private:
  std::size_t bits_;
  std::vector<bool> marked_;
};

}  // namespace

std::optional<std::size_t> clearing_turns(const TriGrid& g, std::size_t m) {
  if (g.order() > kExactInspectionOrderLimit) {
    throw std::invalid_argument("exact inspection solver is limited to n <= " +
                                std::to_string(kExactInspectionOrderLimit));
  }
  if (m == 0) return std::nullopt;
  const std::size_t count = g.vertex_count();
  const MaskNeighborhood nbhd(g);
  const std::uint64_t full = (std::uint64_t{1} << count) - 1;

  // Breadth-first over dirty sets. A state with a dominated (already reached)
  // subset is skipped: by monotonicity of the step it cannot clear sooner.
  DominanceSet seen(count);
  std::vector<std::uint64_t> frontier{full};
  seen.mark_up(full);
  std::size_t depth = 0;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (const std::uint64_t dirty : frontier) {
      // Only searches inside the dirty set matter, and larger searches dominate.
      std::vector<int> positions;
      for (std::uint64_t x = dirty; x != 0; x &= x - 1) positions.push_back(std::countr_zero(x));
      const std::size_t r = std::min(m, positions.size());
      const std::uint64_t limit = std::uint64_t{1} << positions.size();
      std::uint64_t combo = (std::uint64_t{1} << r) - 1;
      while (combo < limit) {
        const std::uint64_t searched = expand(combo, positions);
        const std::uint64_t after = nbhd(dirty & ~searched);
        if (after == 0) return depth + 1;
        if (!seen.dominated(after)) {
          seen.mark_up(after);
          next.push_back(after);
        }
        if (combo == 0) break;
        // Gosper's hack: next integer with the same popcount.
        const std::uint64_t low = combo & (~combo + 1);
        const std::uint64_t ripple = combo + low;
        combo = (((ripple ^ combo) >> 2) / low) | ripple;
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return std::nullopt;
}

InspectionResult exact_inspection_number(const TriGrid& g, std::size_t max_m) {
  InspectionResult result;
  for (std::size_t m = 1; m <= max_m; ++m) {
    const auto turns = clearing_turns(g, m);
    result.turns_by_budget.push_back(turns);
    if (turns) {
      result.value = m;
      break;
    }
  }
  return result;
}

std::vector<InspectionBoundsRow> inspection_bounds_report(int n_max, int exact_max_n) {
  if (n_max < 1 || n_max > 50) throw std::invalid_argument("bounds report needs 1 <= n_max <= 50");
  std::vector<InspectionBoundsRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const TriGrid g(n);
    const auto packing = packing_minimum_table(g);
    InspectionBoundsRow row;
    row.n = n;
    for (std::size_t m = 0; m <= static_cast<std::size_t>(n) + 1; ++m) {
      if (lower_bound_certificate(g, m, packing)) row.certified_exceeds = m;
    }
    const SearchTrace trace = three_stage_strategy(g);
    row.upper = trace.budget;
    row.upper_verified = verify_trace(g, trace);
    if (n <= std::min(exact_max_n, kExactInspectionOrderLimit)) {
      row.exact = exact_inspection_number(g, row.upper).value;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace trigrid
