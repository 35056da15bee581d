#include "trigrid/compression.hpp"

#include <stdexcept>
#include <string>

namespace trigrid {

namespace {

// Coordinate of the vertex at position `x` along line `t` of the given axis.
Coord on_line(Axis axis, int t, int x) {
  return axis == Axis::One ? Coord{t, x} : Coord{x, t};
}

int line_of(Axis axis, Coord v) { return axis == Axis::One ? v.col : v.row; }
int position_of(Axis axis, Coord v) { return axis == Axis::One ? v.row : v.col; }

}  // namespace

Axis axis_from_int(int axis) {
  if (axis == 1) return Axis::One;
  if (axis == 2) return Axis::Two;
  throw std::invalid_argument("axis must be 1 or 2, got " + std::to_string(axis));
}

std::vector<int> SectionFamily::shifted_down(int t) const {
  std::vector<int> out;
  for (const int x : at(t)) {
    if (x - 1 >= 0) out.push_back(x - 1);
  }
  return out;
}

std::vector<int> SectionFamily::shifted_up(int t) const {
  std::vector<int> out;
  for (const int x : at(t)) {
    if (x + 1 <= n) out.push_back(x + 1);
  }
  return out;
}

SectionFamily sections(const TriGrid& g, const VertexSet& a, Axis axis) {
  if (a.capacity() != g.vertex_count() || a.order() != g.order()) {
    throw std::invalid_argument("vertex set does not belong to the grid");
  }
  SectionFamily family{g.order(), axis, std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()) + 1)};
  // Ids are row-major, so positions arrive sorted within each section for both axes.
  for (const Coord v : a.coords(g)) {
    family.sections[static_cast<std::size_t>(line_of(axis, v))].push_back(position_of(axis, v));
  }
  return family;
}

VertexSet assemble(const TriGrid& g, const SectionFamily& family) {
  if (family.n != g.order() || family.sections.size() != static_cast<std::size_t>(g.order()) + 1) {
    throw std::invalid_argument("section family does not match the grid");
  }
  VertexSet out = g.empty_set();
  for (int t = 0; t <= g.order(); ++t) {
    for (const int x : family.at(t)) {
      if (x < 0 || x > g.order() - t) {
        throw std::invalid_argument("section " + std::to_string(t) + " leaves the triangle");
      }
      out.insert(g, on_line(family.axis, t, x));
    }
  }
  return out;
}

VertexSet compress(const TriGrid& g, const VertexSet& a, Axis axis, Side side) {
  const SectionFamily family = sections(g, a, axis);
  VertexSet out = g.empty_set();
  const int n = g.order();
  for (int t = 0; t <= n; ++t) {
    const int size = static_cast<int>(family.at(t).size());
    // An empty section compresses to the empty interval.
    const int first = side == Side::Left ? 0 : n - t - size + 1;
    for (int x = first; x < first + size; ++x) out.insert(g, on_line(axis, t, x));
  }
  return out;
}

VertexSet compress_left(const TriGrid& g, const VertexSet& a, Axis axis) {
  return compress(g, a, axis, Side::Left);
}

VertexSet compress_right(const TriGrid& g, const VertexSet& a, Axis axis) {
  return compress(g, a, axis, Side::Right);
}

bool is_compressed(const TriGrid& g, const VertexSet& a, Axis axis, Side side) {
  return compress(g, a, axis, side) == a;
}

Coord reflect(const TriGrid& g, Coord v, Axis axis) {
  if (!g.contains(v)) throw std::invalid_argument("cannot reflect a vertex outside the grid");
  const int n = g.order();
  return axis == Axis::Two ? Coord{n - v.col - v.row, v.row} : Coord{v.col, n - v.col - v.row};
}

VertexSet reflect(const TriGrid& g, const VertexSet& a, Axis axis) {
  VertexSet out = g.empty_set();
  for (const Coord v : a.coords(g)) out.insert(g, reflect(g, v, axis));
  return out;
}

}  // namespace trigrid
