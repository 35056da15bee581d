#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trigrid {

/// A vertex of T_n in shifted coordinates: `col` counts the vertices to its
/// left within the same row, `row` counts the rows below it.
struct Coord {
  int col = 0;
  int row = 0;

  /// Position along the anti-diagonals, col + row.
  int level() const { return col + row; }

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

using VertexId = std::uint32_t;

class VertexSet;

/// The triangular grid graph T_n with (n+1)(n+2)/2 vertices.
///
/// Dense ids are assigned row-major: row 0 first (left to right), then row 1,
/// and so on up to the single vertex of row n. The graph is immutable after
/// construction and safe to share between threads.
class TriGrid {
 public:
  explicit TriGrid(int n);

  int order() const { return n_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const;

  bool contains(Coord v) const {
    return v.col >= 0 && v.row >= 0 && v.col + v.row <= n_;
  }
  VertexId id(Coord v) const;
  Coord coord(VertexId id) const;

  /// Valid neighbours in the fixed order
  /// (c-1,r), (c+1,r), (c,r-1), (c,r+1), (c+1,r-1), (c-1,r+1).
  std::vector<Coord> neighbors(Coord v) const;
  const std::vector<VertexId>& neighbor_ids(VertexId id) const { return adjacency_[id]; }
  bool adjacent(Coord u, Coord v) const;

  std::size_t row_length(int row) const { return static_cast<std::size_t>(n_ - row + 1); }
  VertexId row_start(int row) const { return row_offset_[static_cast<std::size_t>(row)]; }

  VertexSet empty_set() const;
  VertexSet full_set() const;

 private:
  int n_;
  std::size_t vertex_count_;
  std::vector<VertexId> row_offset_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Subset of V(T_n) backed by a packed bit array over dense ids. The cardinality
/// is maintained on every mutation.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int n, std::size_t capacity);

  int order() const { return n_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(VertexId id) const {
    return id < capacity_ && ((words_[id >> 6] >> (id & 63)) & 1u) != 0;
  }
  bool contains(const TriGrid& g, Coord v) const { return g.contains(v) && contains(g.id(v)); }

  void insert(VertexId id);
  void erase(VertexId id);
  void insert(const TriGrid& g, Coord v) { insert(g.id(v)); }
  void erase(const TriGrid& g, Coord v) { erase(g.id(v)); }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// V \ this.
  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;

  /// Member ids in increasing order.
  std::vector<VertexId> ids() const;
  std::vector<Coord> coords(const TriGrid& g) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Lowest 64 bits; exact when capacity() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  static VertexSet from_mask(const TriGrid& g, std::uint64_t mask);
  static VertexSet from_coords(const TriGrid& g, const std::vector<Coord>& coords);

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }

 private:
  void check_compatible(const VertexSet& other) const;
  void recount();

  int n_ = 0;
  std::size_t capacity_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Outer vertex boundary: vertices outside `a` adjacent to some member.
VertexSet boundary(const TriGrid& g, const VertexSet& a);
/// Closed neighbourhood a ∪ boundary(a).
VertexSet neighborhood(const TriGrid& g, const VertexSet& a);
/// Members of `c` adjacent to some vertex outside `c`.
VertexSet interior_boundary(const TriGrid& g, const VertexSet& c);

enum class RowOrder { TopFirst, BottomFirst };

/// One line per row, glyphs separated by a single space, row `n` first by
/// default. Vertices without a label are drawn with `fill`.
std::string render_ascii(const TriGrid& g, const std::map<Coord, char>& labels,
                         RowOrder order = RowOrder::TopFirst, char fill = '.');

}  // namespace trigrid
