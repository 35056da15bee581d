#include <doctest.h>

#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "oracles.hpp"
#include "trigrid/io.hpp"
#include "trigrid/lions.hpp"

using namespace trigrid;

namespace {

// Contamination after a simultaneous move, written from the rules directly:
// a lion-free vertex is dirty if it was dirty, or if a dirty neighbour reaches
// it over an edge that no lion used this turn.
oracle::PointSet reference_lion_step(int n, const std::vector<oracle::Point>& from,
                                     const std::vector<oracle::Point>& to, const oracle::PointSet& dirty) {
  std::set<std::pair<oracle::Point, oracle::Point>> used;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] == to[i]) continue;
    used.emplace(from[i], to[i]);
    used.emplace(to[i], from[i]);
  }
  const oracle::PointSet occupied(to.begin(), to.end());
  oracle::PointSet out;
  for (const auto v : oracle::vertices(n)) {
    if (occupied.count(v)) continue;
    bool dirty_now = dirty.count(v) > 0;
    for (const auto u : dirty)
      if (!dirty_now && oracle::adjacent(u, v) && !used.count({u, v})) dirty_now = true;
    if (dirty_now) out.insert(v);
  }
  return out;
}

std::vector<oracle::Point> pts(const std::vector<Coord>& cs) {
  std::vector<oracle::Point> out;
  for (const Coord c : cs) out.emplace_back(c.col, c.row);
  return out;
}

// Least number of lions that can clear T_n, by breadth-first search over
// (positions, contamination) from every placement. Tiny n only.
std::optional<std::size_t> reference_lion_number(int n, std::size_t max_l) {
  const auto vs = oracle::vertices(n);
  for (std::size_t l = 1; l <= max_l; ++l) {
    std::vector<std::vector<oracle::Point>> placements{{}};
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<std::vector<oracle::Point>> next;
      for (const auto& p : placements)
        for (const auto v : vs) {
          auto q = p;
          q.push_back(v);
          next.push_back(q);
        }
      placements = next;
    }
    std::set<std::pair<std::vector<oracle::Point>, oracle::PointSet>> seen;
    std::queue<std::pair<std::vector<oracle::Point>, oracle::PointSet>> q;
    for (const auto& p : placements) {
      oracle::PointSet dirty(vs.begin(), vs.end());
      for (const auto v : p) dirty.erase(v);
      if (seen.emplace(p, dirty).second) q.emplace(p, dirty);
    }
    while (!q.empty()) {
      auto [pos, dirty] = q.front();
      q.pop();
      if (dirty.empty()) return l;
      std::vector<std::vector<oracle::Point>> options{{}};
      for (const auto v : pos) {
        std::vector<oracle::Point> choices{v};
        for (const auto u : vs)
          if (oracle::adjacent(u, v)) choices.push_back(u);
        std::vector<std::vector<oracle::Point>> next;
        for (const auto& o : options)
          for (const auto c : choices) {
            auto e = o;
            e.push_back(c);
            next.push_back(e);
          }
        options = next;
      }
      for (const auto& to : options) {
        auto nd = reference_lion_step(n, pos, to, dirty);
        if (seen.emplace(to, nd).second) q.emplace(to, nd);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("column sweep contamination on T_2") {
  const TriGrid g(2);
  const auto trace = column_sweep_strategy(g);
  const std::vector<VertexSet> expected{
      VertexSet::from_coords(g, {{1, 0}, {1, 1}, {2, 0}}),
      VertexSet::from_coords(g, {{1, 1}, {2, 0}}),
      VertexSet::from_coords(g, {{2, 0}}),
      g.empty_set(),
  };
  CHECK(trace.start == std::vector<Coord>{{0, 0}, {0, 1}, {0, 2}});
  CHECK(trace.contaminated == expected);
  CHECK(trace.winning());
  CHECK(trace.turns() == 3);
}

TEST_CASE("single lion steps on T_2") {
  const TriGrid g(2);
  const LionConfig start{{{0, 0}, {0, 1}, {0, 2}}};
  auto cont = initial_contamination(g, start);
  CHECK(cont.contaminated == VertexSet::from_coords(g, {{1, 0}, {1, 1}, {2, 0}}));
  auto [p1, c1] = lion_step(g, start, LionMove::single(3, 0, {1, 0}), cont);
  CHECK(c1.contaminated == VertexSet::from_coords(g, {{1, 1}, {2, 0}}));
  auto [p2, c2] = lion_step(g, p1, LionMove::single(3, 1, {1, 1}), c1);
  CHECK(c2.contaminated == VertexSet::from_coords(g, {{2, 0}}));
  const LionMove stay{std::vector<std::optional<Coord>>(3)};
  CHECK(lion_step(g, p2, stay, {g.empty_set()}).second.contaminated.empty());
}

TEST_CASE("illegal moves are rejected") {
  const TriGrid g(3);
  const LionConfig start{{{0, 0}, {1, 1}}};
  const auto cont = initial_contamination(g, start);
  CHECK_THROWS_AS(lion_step(g, start, LionMove::single(2, 0, {2, 0}), cont), TraceValidationError);
  CHECK_THROWS_AS(lion_step(g, start, LionMove::single(3, 0, {1, 0}), cont), TraceValidationError);
  CHECK_THROWS_AS(lion_step(g, start, LionMove::single(2, 1, {3, 1}), cont), TraceValidationError);
  try {
    replay_lions(g, start.positions, {LionMove::single(2, 0, {1, 0}), LionMove::single(2, 0, {3, 0})});
    FAIL("expected a validation error");
  } catch (const TraceValidationError& e) {
    CHECK(e.turn() == 2);
  }
}

TEST_CASE("lion step agrees with the rule oracle") {
  for (int n = 1; n <= 5; ++n) {
    const TriGrid g(n);
    const std::size_t lions = static_cast<std::size_t>(n) + 1;
    const auto walk = random_lion_walk(g, lions, 60, static_cast<std::uint64_t>(n) * 101);
    for (std::size_t t = 0; t < walk.turns(); ++t) {
      CHECK(oracle::points(g, walk.contaminated[t + 1]) ==
            reference_lion_step(n, pts(walk.positions[t].positions), pts(walk.positions[t + 1].positions),
                                oracle::points(g, walk.contaminated[t])));
    }
  }
}

TEST_CASE("swaps and stacking are legal") {
  const TriGrid g(2);
  const std::vector<Coord> start{{0, 0}, {1, 0}, {1, 0}};
  LionMove swap{{Coord{1, 0}, Coord{0, 0}, std::nullopt}};
  const auto trace = replay_lions(g, start, {swap});
  CHECK(trace.positions[1].positions == std::vector<Coord>{{1, 0}, {0, 0}, {1, 0}});
  CHECK_FALSE(trace.contaminated[1].contains(g, {0, 0}));
}

TEST_CASE("contamination invariants on random walks") {
  for (int n = 1; n <= 6; ++n) {
    const TriGrid g(n);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto walk = random_lion_walk(g, 1 + seed % 4, 40, seed);
      for (std::size_t t = 0; t <= walk.turns(); ++t) {
        for (const Coord p : walk.positions[t].positions) CHECK_FALSE(walk.contaminated[t].contains(g, p));
        if (t == 0) continue;
        const auto& prev = walk.contaminated[t - 1];
        const auto& cur = walk.contaminated[t];
        CHECK(cur.is_subset_of(neighborhood(g, prev)));
        const auto occupied = VertexSet::from_coords(g, walk.positions[t].positions);
        CHECK((prev - cur).is_subset_of(occupied));
      }
    }
  }
  const auto a = random_lion_walk(TriGrid(4), 3, 30, 77);
  const auto b = random_lion_walk(TriGrid(4), 3, 30, 77);
  CHECK(a.positions.back().positions == b.positions.back().positions);
}

TEST_CASE("column sweep clears and keeps its invariant") {
  const TriGrid t1(1);
  const auto one = column_sweep_strategy(t1);
  CHECK(one.start == std::vector<Coord>{{0, 0}, {0, 1}});
  CHECK(one.turns() == 1);
  CHECK(one.winning());
  for (int n = 1; n <= 40; ++n) {
    const TriGrid g(n);
    const auto trace = column_sweep_strategy(g);
    CHECK(trace.lions == static_cast<std::size_t>(n) + 1);
    CHECK(trace.winning());
    CHECK(column_sweep_invariant_holds(g, trace));
    CHECK(trace.turns() == static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST_CASE("coupled searcher clears") {
  const TriGrid g(2);
  const auto trace = column_sweep_strategy(g);
  const auto search = couple_to_search(g, trace);
  CHECK(search.turns() == trace.turns() + 1);
  CHECK(search.budget == 6);
  CHECK(search.max_search_size() <= 6);
  CHECK(verify_trace(g, search));
  for (int n = 1; n <= 20; ++n) {
    const TriGrid h(n);
    const auto t = column_sweep_strategy(h);
    const auto s = couple_to_search(h, t);
    CHECK(s.budget == 2 * t.lions);
    CHECK(s.max_search_size() <= s.budget);
    CHECK(verify_trace(h, s));
    CHECK(claim_check(h, t).holds);
  }
}

TEST_CASE("coupling refuses losing traces") {
  const TriGrid g(1);
  const auto lonely = replay_lions(g, {{0, 0}}, {LionMove::single(1, 0, {1, 0})});
  CHECK_FALSE(lonely.winning());
  CHECK_THROWS_AS(couple_to_search(g, lonely), std::invalid_argument);
}

TEST_CASE("claim holds on random legal walks") {
  std::size_t checked = 0;
  for (int n = 1; n <= 5; ++n) {
    const TriGrid g(n);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto walk = random_lion_walk(g, 1 + seed % (static_cast<std::size_t>(n) + 2), 25, seed * 7 + 1);
      const auto report = claim_check(g, walk);
      CHECK(report.holds);
      CHECK_FALSE(report.first_failure.has_value());
      ++checked;
      if (walk.winning()) CHECK(verify_trace(g, couple_to_search(g, walk)));
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("lion traces round-trip through JSON") {
  const TriGrid g(4);
  for (const auto& trace : {column_sweep_strategy(g), random_lion_walk(g, 3, 12, 5)}) {
    const auto j = io::to_json(g, trace);
    const auto back = io::lion_trace_from_json(j);
    CHECK(back.contaminated == trace.contaminated);
    CHECK(io::to_json(g, back).dump() == j.dump());
  }
  auto j = io::to_json(g, column_sweep_strategy(g));
  j["moves"][0][0][1] = nlohmann::json::array({3, 0});
  CHECK_THROWS_AS(io::lion_trace_from_json(j), TraceValidationError);
}

TEST_CASE("exact lion number") {
  const auto t1 = exact_lion_number(TriGrid(1), 3);
  CHECK(t1.value == 2u);
  CHECK(t1.value == reference_lion_number(1, 3));
  CHECK(t1.winning_by_count == std::vector<bool>{false, true});

  const TriGrid g(2);
  const auto t2 = exact_lion_number(g, 3);
  REQUIRE(t2.value.has_value());
  CHECK(static_cast<double>(*t2.value) > 2 / (2 * std::sqrt(2.0)));
  CHECK(*t2.value <= 3);
  CHECK(t2.value == reference_lion_number(2, 3));
  CHECK(t2.start.size() == *t2.value);

  CHECK_THROWS(exact_lion_number(TriGrid(3), 2));
}
