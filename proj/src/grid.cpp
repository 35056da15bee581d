#include "trigrid/grid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trigrid {

namespace {

std::string coord_text(Coord v) {
  return "(" + std::to_string(v.col) + "," + std::to_string(v.row) + ")";
}

constexpr Coord kNeighborOffsets[] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {1, -1}, {-1, 1}};

}  // namespace

TriGrid::TriGrid(int n) : n_(n), vertex_count_(0) {
  if (n < 1) {
    throw std::invalid_argument("grid order must be at least 1, got " + std::to_string(n));
  }
  vertex_count_ = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
  row_offset_.reserve(static_cast<std::size_t>(n) + 1);
  VertexId offset = 0;
  for (int r = 0; r <= n; ++r) {
    row_offset_.push_back(offset);
    offset += static_cast<VertexId>(row_length(r));
  }
  adjacency_.resize(vertex_count_);
  for (VertexId i = 0; i < vertex_count_; ++i) {
    const Coord v = coord(i);
    for (const Coord d : kNeighborOffsets) {
      const Coord u{v.col + d.col, v.row + d.row};
      if (contains(u)) adjacency_[i].push_back(id(u));
    }
  }
}

std::size_t TriGrid::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& adj : adjacency_) degree_sum += adj.size();
  return degree_sum / 2;
}

VertexId TriGrid::id(Coord v) const {
  if (!contains(v)) {
    throw std::invalid_argument("vertex " + coord_text(v) + " is not in T_" + std::to_string(n_));
  }
  return row_offset_[static_cast<std::size_t>(v.row)] + static_cast<VertexId>(v.col);
}

Coord TriGrid::coord(VertexId id) const {
  if (id >= vertex_count_) {
    throw std::invalid_argument("vertex id " + std::to_string(id) + " out of range");
  }
  const auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), id);
  const int row = static_cast<int>(it - row_offset_.begin()) - 1;
  return {static_cast<int>(id - row_offset_[static_cast<std::size_t>(row)]), row};
}

std::vector<Coord> TriGrid::neighbors(Coord v) const {
  const auto& adj = adjacency_[id(v)];
  std::vector<Coord> out;
  out.reserve(adj.size());
  for (const VertexId u : adj) out.push_back(coord(u));
  return out;
}

bool TriGrid::adjacent(Coord u, Coord v) const {
  const auto& adj = adjacency_[id(u)];
  const VertexId target = id(v);
  return std::find(adj.begin(), adj.end(), target) != adj.end();
}

VertexSet TriGrid::empty_set() const { return VertexSet(n_, vertex_count_); }

VertexSet TriGrid::full_set() const { return empty_set().complement(); }

// -- VertexSet --

VertexSet::VertexSet(int n, std::size_t capacity)
    : n_(n), capacity_(capacity), count_(0), words_((capacity + 63) / 64, 0) {}

void VertexSet::insert(VertexId id) {
  if (id >= capacity_) throw std::invalid_argument("vertex id out of range for set");
  std::uint64_t& w = words_[id >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (id & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(VertexId id) {
  if (id >= capacity_) throw std::invalid_argument("vertex id out of range for set");
  std::uint64_t& w = words_[id >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (id & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --count_;
  }
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (n_ != other.n_ || capacity_ != other.capacity_) {
    throw std::invalid_argument("vertex sets belong to different grids");
  }
}

void VertexSet::recount() {
  count_ = 0;
  for (const auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = *this;
  for (auto& w : out.words_) w = ~w;
  if (const std::size_t tail = capacity_ & 63; tail != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  out.recount();
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<VertexId> VertexSet::ids() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(static_cast<VertexId>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Coord> VertexSet::coords(const TriGrid& g) const {
  std::vector<Coord> out;
  out.reserve(count_);
  for (const VertexId id : ids()) out.push_back(g.coord(id));
  return out;
}

VertexSet VertexSet::from_mask(const TriGrid& g, std::uint64_t mask) {
  if (g.vertex_count() > 64) throw std::invalid_argument("mask construction needs at most 64 vertices");
  if (g.vertex_count() < 64 && (mask >> g.vertex_count()) != 0) {
    throw std::invalid_argument("mask has bits beyond the vertex count");
  }
  VertexSet s = g.empty_set();
  s.words_[0] = mask;
  s.recount();
  return s;
}

VertexSet VertexSet::from_coords(const TriGrid& g, const std::vector<Coord>& coords) {
  VertexSet s = g.empty_set();
  for (const Coord v : coords) s.insert(g.id(v));
  return s;
}

// -- boundary arithmetic --

namespace {

void require_member_of(const TriGrid& g, const VertexSet& a) {
  if (a.order() != g.order() || a.capacity() != g.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to T_" + std::to_string(g.order()));
  }
}

}  // namespace

VertexSet neighborhood(const TriGrid& g, const VertexSet& a) {
  require_member_of(g, a);
  VertexSet out = a;
  for (const VertexId v : a.ids()) {
    for (const VertexId u : g.neighbor_ids(v)) out.insert(u);
  }
  return out;
}

VertexSet boundary(const TriGrid& g, const VertexSet& a) { return neighborhood(g, a) - a; }

VertexSet interior_boundary(const TriGrid& g, const VertexSet& c) {
  require_member_of(g, c);
  VertexSet out = g.empty_set();
  for (const VertexId v : c.ids()) {
    for (const VertexId u : g.neighbor_ids(v)) {
      if (!c.contains(u)) {
        out.insert(v);
        break;
      }
    }
  }
  return out;
}

std::string render_ascii(const TriGrid& g, const std::map<Coord, char>& labels, RowOrder order,
                         char fill) {
  std::string out;
  const int n = g.order();
  for (int i = 0; i <= n; ++i) {
    const int row = order == RowOrder::TopFirst ? n - i : i;
    for (int col = 0; col + row <= n; ++col) {
      if (col > 0) out += ' ';
      const auto it = labels.find(Coord{col, row});
      out += it == labels.end() ? fill : it->second;
    }
    out += '\n';
  }
  return out;
}

}  // namespace trigrid
