#pragma once

#include <vector>

#include "trigrid/grid.hpp"

namespace trigrid {

/// Axis 1 slices a set by column (section t holds the rows used in column t);
/// axis 2 slices by row (section t holds the columns used in row t).
enum class Axis { One = 1, Two = 2 };

/// Left pushes every section to the low end of its line, right to the high end.
enum class Side { Left, Right };

Axis axis_from_int(int axis);

/// The i-sections of a vertex set. Section t is a sorted subset of
/// {0, ..., n - t}.
struct SectionFamily {
  int n = 0;
  Axis axis = Axis::One;
  std::vector<std::vector<int>> sections;

  const std::vector<int>& at(int t) const { return sections.at(static_cast<std::size_t>(t)); }

  /// {x - 1 : x in section t} restricted to {0, ..., n}.
  std::vector<int> shifted_down(int t) const;
  /// {x + 1 : x in section t} restricted to {0, ..., n}.
  std::vector<int> shifted_up(int t) const;
};

SectionFamily sections(const TriGrid& g, const VertexSet& a, Axis axis);

/// Inverse of sections(); throws std::invalid_argument if a section leaves the triangle.
VertexSet assemble(const TriGrid& g, const SectionFamily& family);

/// C_i^-: each section becomes {0, ..., |A_t| - 1}.
VertexSet compress_left(const TriGrid& g, const VertexSet& a, Axis axis);
/// C_i^+: each section becomes {n - t - |A_t| + 1, ..., n - t}.
VertexSet compress_right(const TriGrid& g, const VertexSet& a, Axis axis);
VertexSet compress(const TriGrid& g, const VertexSet& a, Axis axis, Side side);

bool is_compressed(const TriGrid& g, const VertexSet& a, Axis axis, Side side);

/// Mirror that keeps every axis-`axis` line fixed and reverses it:
/// axis 2 maps (c, r) to (n - c - r, r), axis 1 maps (c, r) to (c, n - c - r).
Coord reflect(const TriGrid& g, Coord v, Axis axis);
VertexSet reflect(const TriGrid& g, const VertexSet& a, Axis axis);

}  // namespace trigrid
