#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "trigrid/compression.hpp"
#include "trigrid/order.hpp"

using namespace trigrid;

namespace {

// Direct section-wise compression on point sets. Axis 1 lines are columns,
// axis 2 lines are rows; line t has n - t + 1 slots.
oracle::PointSet reference_compress(int n, const oracle::PointSet& a, int axis, bool left) {
  std::map<int, int> count;
  for (const auto& [c, r] : a) ++count[axis == 1 ? c : r];
  oracle::PointSet out;
  for (const auto& [t, s] : count) {
    const int lo = left ? 0 : n - t - s + 1;
    for (int x = lo; x < lo + s; ++x) out.insert(axis == 1 ? oracle::Point{t, x} : oracle::Point{x, t});
  }
  return out;
}

VertexSet random_set(const TriGrid& g, std::mt19937_64& rng) {
  auto a = g.empty_set();
  const auto keep = rng() % 8 + 1;
  for (VertexId id = 0; id < g.vertex_count(); ++id)
    if (rng() % 8 < keep) a.insert(id);
  return a;
}

constexpr Axis kAxes[] = {Axis::One, Axis::Two};
constexpr Side kSides[] = {Side::Left, Side::Right};

}  // namespace

TEST_CASE("sections of a small set") {
  const TriGrid g(3);
  const auto a = VertexSet::from_coords(g, {{1, 1}, {2, 0}});
  const auto fam = sections(g, a, Axis::One);
  CHECK(fam.at(0).empty());
  CHECK(fam.at(1) == std::vector<int>{1});
  CHECK(fam.at(2) == std::vector<int>{0});
  CHECK(fam.at(3).empty());
  CHECK(fam.shifted_down(1) == std::vector<int>{0});
  CHECK(fam.shifted_up(2) == std::vector<int>{1});

  for (const Axis axis : kAxes) {
    for (const auto& s : sections(g, g.empty_set(), axis).sections) CHECK(s.empty());
    const auto full = sections(g, g.full_set(), axis);
    for (int t = 0; t <= 3; ++t) CHECK(full.at(t).size() == static_cast<std::size_t>(3 - t + 1));
  }
}

TEST_CASE("sections reassemble to the original set") {
  const TriGrid g(6);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_set(g, rng);
    for (const Axis axis : kAxes) {
      const auto fam = sections(g, a, axis);
      for (int t = 0; t <= 6; ++t)
        for (const int x : fam.at(t)) CHECK(x <= 6 - t);
      CHECK(assemble(g, fam) == a);
    }
  }
  SectionFamily bad{3, Axis::Two, {{}, {}, {}, {}}};
  bad.sections[2] = {2};
  CHECK_THROWS_AS(assemble(TriGrid(3), bad), std::invalid_argument);
}

TEST_CASE("left compressions of a two-vertex set") {
  const TriGrid g(3);
  const auto a = VertexSet::from_coords(g, {{1, 1}, {2, 0}});
  CHECK(compress_left(g, a, Axis::One) == VertexSet::from_coords(g, {{1, 0}, {2, 0}}));
  CHECK(compress_left(g, a, Axis::Two) == VertexSet::from_coords(g, {{0, 0}, {0, 1}}));
  CHECK_FALSE(is_compressed(g, a, Axis::One, Side::Left));
}

TEST_CASE("right compression example") {
  const TriGrid g(3);
  CHECK(compress_right(g, VertexSet::from_coords(g, {{0, 0}}), Axis::Two) == VertexSet::from_coords(g, {{3, 0}}));
  CHECK(compress_right(g, VertexSet::from_coords(g, {{0, 0}}), Axis::One) == VertexSet::from_coords(g, {{0, 3}}));
}

TEST_CASE("compressions agree with the section oracle") {
  for (int n = 1; n <= 7; ++n) {
    const TriGrid g(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_set(g, rng);
      const auto pts = oracle::points(g, a);
      for (const Axis axis : kAxes) {
        const int ax = static_cast<int>(axis);
        CHECK(oracle::points(g, compress_left(g, a, axis)) == reference_compress(n, pts, ax, true));
        CHECK(oracle::points(g, compress_right(g, a, axis)) == reference_compress(n, pts, ax, false));
      }
    }
  }
}

TEST_CASE("fixed points and idempotence") {
  const TriGrid g(5);
  std::mt19937_64 rng(9);
  for (const Axis axis : kAxes) {
    for (const Side side : kSides) {
      CHECK(compress(g, g.empty_set(), axis, side).empty());
      CHECK(compress(g, g.full_set(), axis, side) == g.full_set());
      CHECK(is_compressed(g, g.empty_set(), axis, side));
      CHECK(is_compressed(g, g.full_set(), axis, side));
      for (int trial = 0; trial < 200; ++trial) {
        const auto once = compress(g, random_set(g, rng), axis, side);
        CHECK(is_compressed(g, once, axis, side));
        CHECK(compress(g, once, axis, side) == once);
      }
    }
  }
}

TEST_CASE("initial segments are left-compressed on both axes") {
  for (int n = 1; n <= 5; ++n) {
    const TriGrid g(n);
    for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
      const auto seg = initial_segment(g, k);
      CHECK(is_compressed(g, seg, Axis::One, Side::Left));
      CHECK(is_compressed(g, seg, Axis::Two, Side::Left));
    }
  }
}

TEST_CASE("reflection") {
  const TriGrid g(6);
  CHECK(reflect(g, Coord{0, 0}, Axis::Two) == Coord{6, 0});
  CHECK(reflect(g, Coord{1, 2}, Axis::Two) == Coord{3, 2});
  CHECK(reflect(g, Coord{1, 2}, Axis::One) == Coord{1, 3});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_set(g, rng);
    for (const Axis axis : kAxes) {
      CHECK(reflect(g, reflect(g, a, axis), axis) == a);
      CHECK(boundary(g, reflect(g, a, axis)).size() == boundary(g, a).size());
      CHECK(compress_right(g, a, axis) == reflect(g, compress_left(g, reflect(g, a, axis), axis), axis));
    }
  }
}

TEST_CASE("neighbourhoods never grow, exhaustively for small orders") {
  for (int n = 1; n <= 4; ++n) {
    const TriGrid g(n);
    const std::uint64_t total = std::uint64_t{1} << g.vertex_count();
    std::size_t violations = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
      const auto a = VertexSet::from_mask(g, m);
      const std::size_t before = neighborhood(g, a).size();
      for (const Axis axis : kAxes)
        for (const Side side : kSides) {
          const auto c = compress(g, a, axis, side);
          if (c.size() != a.size() || neighborhood(g, c).size() > before) ++violations;
        }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("neighbourhoods never grow on random sets up to n = 9") {
  std::mt19937_64 rng(17);
  for (int n = 5; n <= 9; ++n) {
    const TriGrid g(n);
    for (int trial = 0; trial < 4000; ++trial) {
      const auto a = random_set(g, rng);
      const std::size_t before = neighborhood(g, a).size();
      for (const Axis axis : kAxes)
        for (const Side side : kSides) CHECK(neighborhood(g, compress(g, a, axis, side)).size() <= before);
    }
  }
}

TEST_CASE("rank potential and diagonal preservation") {
  const int n = 7;
  const TriGrid g(n);
  const SimplicialOrder order(g);
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_set(g, rng);
    auto diag_free = a;
    auto with_diag = a;
    for (int c = 0; c <= n; ++c) {
      diag_free.erase(g, {c, n - c});
      with_diag.insert(g, {c, n - c});
    }
    for (const Axis axis : kAxes) {
      const auto l = compress_left(g, a, axis);
      const auto r = compress_right(g, a, axis);
      CHECK(order.rank_sum(l) <= order.rank_sum(a));
      CHECK((order.rank_sum(l) == order.rank_sum(a)) == (l == a));
      CHECK(order.rank_sum(r) >= order.rank_sum(a));
      CHECK((order.rank_sum(r) == order.rank_sum(a)) == (r == a));

      const auto l_free = compress_left(g, diag_free, axis);
      const auto r_full = compress_right(g, with_diag, axis);
      for (int c = 0; c <= n; ++c) {
        CHECK_FALSE(l_free.contains(g, {c, n - c}));
        CHECK(r_full.contains(g, {c, n - c}));
      }
    }
  }
}

TEST_CASE("axis parsing") {
  CHECK(axis_from_int(1) == Axis::One);
  CHECK(axis_from_int(2) == Axis::Two);
  CHECK_THROWS(axis_from_int(3));
}
