#include "trigrid/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace trigrid {

bool simplicially_before(Coord u, Coord v) {
  if (u.level() != v.level()) return u.level() < v.level();
  return u.col > v.col;
}

SimplicialOrder::SimplicialOrder(const TriGrid& g)
    : grid_(&g), rank_of_id_(g.vertex_count()), id_at_rank_(g.vertex_count()) {
  std::iota(id_at_rank_.begin(), id_at_rank_.end(), VertexId{0});
  std::sort(id_at_rank_.begin(), id_at_rank_.end(),
            [&g](VertexId a, VertexId b) { return simplicially_before(g.coord(a), g.coord(b)); });
  for (std::size_t r = 0; r < id_at_rank_.size(); ++r) rank_of_id_[id_at_rank_[r]] = r;
}

SimplicialRank SimplicialOrder::rank(Coord v) const { return {rank_of_id_[grid_->id(v)]}; }

Coord SimplicialOrder::vertex(SimplicialRank r) const {
  if (r.value >= id_at_rank_.size()) throw std::out_of_range("simplicial rank out of range");
  return grid_->coord(id_at_rank_[r.value]);
}

std::uint64_t SimplicialOrder::rank_sum(const VertexSet& a) const {
  std::uint64_t sum = 0;
  for (const VertexId id : a.ids()) sum += rank_of_id_.at(id);
  return sum;
}

VertexSet SimplicialOrder::initial_segment(std::size_t k) const {
  if (k > id_at_rank_.size()) {
    throw std::out_of_range("segment size " + std::to_string(k) + " exceeds vertex count");
  }
  VertexSet s = grid_->empty_set();
  for (std::size_t r = 0; r < k; ++r) s.insert(id_at_rank_[r]);
  return s;
}

VertexSet SimplicialOrder::final_segment(std::size_t k) const {
  if (k > id_at_rank_.size()) {
    throw std::out_of_range("segment size " + std::to_string(k) + " exceeds vertex count");
  }
  VertexSet s = grid_->empty_set();
  for (std::size_t r = id_at_rank_.size() - k; r < id_at_rank_.size(); ++r) s.insert(id_at_rank_[r]);
  return s;
}

SimplicialRank simplicial_rank(const TriGrid& g, Coord v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex is not in the grid");
  // Every vertex on a lower level, then the same-level vertices with a larger column.
  return {triangular(static_cast<std::size_t>(v.level())) + static_cast<std::size_t>(v.row)};
}

VertexSet initial_segment(const TriGrid& g, std::size_t k) {
  return SimplicialOrder(g).initial_segment(k);
}

VertexSet final_segment(const TriGrid& g, std::size_t k) {
  return SimplicialOrder(g).final_segment(k);
}

std::size_t initial_segment_boundary_size(const TriGrid& g, std::size_t k) {
  const auto n = static_cast<std::size_t>(g.order());
  if (k == 0 || k > triangular(n)) {
    throw std::out_of_range("initial segment closed form needs 1 <= k <= " +
                            std::to_string(triangular(n)) + ", got " + std::to_string(k));
  }
  std::size_t l = 0;
  while (!(triangular(l) < k && k <= triangular(l + 1))) ++l;
  return l + 2;
}

std::size_t final_segment_boundary_size(const TriGrid& g, std::size_t k) {
  const auto n = static_cast<std::size_t>(g.order());
  const std::size_t total = g.vertex_count();
  if (k < n + 1 || k > total) {
    throw std::out_of_range("final segment closed form needs " + std::to_string(n + 1) +
                            " <= k <= " + std::to_string(total) + ", got " + std::to_string(k));
  }
  if (k == total) return 0;
  // (l+1) + ... + (n+1) = total - triangular(l).
  std::size_t l = n;
  while (!(total - triangular(l) <= k && k < total - triangular(l - 1))) --l;
  return l;
}

std::size_t packing_minimum(const TriGrid& g, std::size_t k) {
  const SimplicialOrder order(g);
  const std::size_t a = boundary(g, order.initial_segment(k)).size();
  const std::size_t b = boundary(g, order.final_segment(k)).size();
  return std::min(a, b);
}

std::vector<std::size_t> packing_minimum_table(const TriGrid& g) {
  const SimplicialOrder order(g);
  const std::size_t total = g.vertex_count();
  std::vector<std::size_t> out(total + 1);
  VertexSet init = g.empty_set();
  VertexSet fin = g.empty_set();
  for (std::size_t k = 0; k <= total; ++k) {
    if (k > 0) {
      init.insert(order.vertex_id(SimplicialRank{k - 1}));
      fin.insert(order.vertex_id(SimplicialRank{total - k}));
    }
    out[k] = std::min(boundary(g, init).size(), boundary(g, fin).size());
  }
  return out;
}

}  // namespace trigrid
