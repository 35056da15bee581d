#pragma once

// Independent reference implementations used by the test suites. None of
// these touch the library's adjacency tables or bit sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "trigrid/grid.hpp"

namespace oracle {

using Point = std::pair<int, int>;  // (col, row)
using PointSet = std::set<Point>;

inline std::vector<Point> vertices(int n) {
  std::vector<Point> out;
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c + r <= n; ++c) out.emplace_back(c, r);
  return out;
}

// Unshifted equilateral embedding scaled by 2: x = 2c + r, y = r (times sqrt 3).
// Unit distance becomes dx^2 + 3 dy^2 == 4.
inline bool adjacent(Point u, Point v) {
  const int dx = (2 * u.first + u.second) - (2 * v.first + v.second);
  const int dy = u.second - v.second;
  return dx * dx + 3 * dy * dy == 4;
}

inline PointSet boundary(int n, const PointSet& a) {
  PointSet out;
  for (const Point v : vertices(n)) {
    if (a.count(v)) continue;
    for (const Point u : a) {
      if (adjacent(u, v)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

inline PointSet closed_neighborhood(int n, const PointSet& a) {
  PointSet out = boundary(n, a);
  out.insert(a.begin(), a.end());
  return out;
}

inline PointSet from_mask(int n, std::uint64_t mask) {
  PointSet out;
  const auto vs = vertices(n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if ((mask >> i) & 1u) out.insert(vs[i]);
  return out;
}

inline PointSet points(const trigrid::TriGrid& g, const trigrid::VertexSet& s) {
  PointSet out;
  for (const auto v : s.coords(g)) out.emplace(v.col, v.row);
  return out;
}

inline trigrid::VertexSet to_set(const trigrid::TriGrid& g, const PointSet& s) {
  auto out = g.empty_set();
  for (const auto& [c, r] : s) out.insert(g, trigrid::Coord{c, r});
  return out;
}

// Glossary ordering: by level, ties broken by larger col first.
inline bool simplicial_less(Point u, Point v) {
  const int lu = u.first + u.second;
  const int lv = v.first + v.second;
  if (lu != lv) return lu < lv;
  return u.first > v.first;
}

// Smallest boundary over all k-subsets, by plain recursion over sorted points.
inline std::vector<std::size_t> min_boundary_by_size(int n) {
  const auto vs = vertices(n);
  std::vector<std::size_t> best(vs.size() + 1, vs.size());
  const std::uint64_t total = std::uint64_t{1} << vs.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto a = from_mask(n, m);
    best[a.size()] = std::min(best[a.size()], boundary(n, a).size());
  }
  return best;
}

// Next dirty set of a zero-visibility turn: closed neighbourhood of what survives the search.
inline PointSet search_step(int n, const PointSet& dirty, const PointSet& searched) {
  PointSet rest;
  for (const Point v : dirty)
    if (!searched.count(v)) rest.insert(v);
  return closed_neighborhood(n, rest);
}

}  // namespace oracle
