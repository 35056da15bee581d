#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trigrid/grid.hpp"

namespace trigrid {

/// 0-based position in the simplicial ordering: u precedes v when
/// level(u) < level(v), or the levels tie and u.col > v.col.
struct SimplicialRank {
  std::size_t value = 0;
  friend auto operator<=>(const SimplicialRank&, const SimplicialRank&) = default;
};

bool simplicially_before(Coord u, Coord v);

/// Precomputed rank <-> vertex tables for one grid.
class SimplicialOrder {
 public:
  explicit SimplicialOrder(const TriGrid& g);

  SimplicialRank rank(Coord v) const;
  SimplicialRank rank(VertexId id) const { return {rank_of_id_.at(id)}; }
  Coord vertex(SimplicialRank r) const;
  VertexId vertex_id(SimplicialRank r) const { return id_at_rank_.at(r.value); }

  /// Sum of the ranks of every member; the potential minimised by left
  /// compressions and maximised by right compressions.
  std::uint64_t rank_sum(const VertexSet& a) const;

  VertexSet initial_segment(std::size_t k) const;
  VertexSet final_segment(std::size_t k) const;

  const TriGrid& grid() const { return *grid_; }

 private:
  const TriGrid* grid_;
  std::vector<std::size_t> rank_of_id_;
  std::vector<VertexId> id_at_rank_;
};

SimplicialRank simplicial_rank(const TriGrid& g, Coord v);

/// The k lowest-ranked vertices (ice-cream-cone packing with the top corner
/// of the unshifted triangle as origin).
VertexSet initial_segment(const TriGrid& g, std::size_t k);
/// The k highest-ranked vertices (row packing); equals V \ initial_segment(|V|-k).
VertexSet final_segment(const TriGrid& g, std::size_t k);

/// 1 + 2 + ... + j.
constexpr std::size_t triangular(std::size_t j) { return j * (j + 1) / 2; }

/// Closed form l + 2 with triangular(l) < k <= triangular(l+1). Only defined
/// for 1 <= k <= triangular(n), where the segment stays off the diagonal
/// |x| = n; throws std::out_of_range otherwise.
std::size_t initial_segment_boundary_size(const TriGrid& g, std::size_t k);

/// Closed form l with (l+1) + ... + (n+1) <= k < l + ... + (n+1), and 0 for
/// the full vertex set. Only defined for n+1 <= k <= |V|; throws
/// std::out_of_range otherwise.
std::size_t final_segment_boundary_size(const TriGrid& g, std::size_t k);

/// min(|boundary(initial_segment(k))|, |boundary(final_segment(k))|) by direct
/// evaluation, valid for every 0 <= k <= |V|.
std::size_t packing_minimum(const TriGrid& g, std::size_t k);

/// packing_minimum for every k in [0, |V|], computed incrementally.
std::vector<std::size_t> packing_minimum_table(const TriGrid& g);

}  // namespace trigrid
