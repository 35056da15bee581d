#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trigrid/grid.hpp"

namespace trigrid {

/// Neighbourhood of a subset given as a bit mask over dense ids, for grids with
/// at most 64 vertices. Uses per-chunk lookup tables so one evaluation costs a
/// handful of loads.
class MaskNeighborhood {
 public:
  explicit MaskNeighborhood(const TriGrid& g);

  std::uint64_t operator()(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < tables_.size(); ++c) {
      out |= tables_[c][(mask >> (c * kChunkBits)) & kChunkMask];
    }
    return out;
  }

  std::size_t boundary_size(std::uint64_t mask) const;

 private:
  static constexpr std::size_t kChunkBits = 11;
  static constexpr std::uint64_t kChunkMask = (std::uint64_t{1} << kChunkBits) - 1;
  std::vector<std::vector<std::uint64_t>> tables_;
};

struct MinBoundaryEntry {
  std::size_t k = 0;
  std::size_t min_boundary = 0;
  std::size_t packing_min = 0;
  /// Smallest mask (as an integer) attaining min_boundary.
  std::uint64_t witness = 0;
  bool verified = false;
};

struct MinBoundaryTable {
  int n = 0;
  std::vector<MinBoundaryEntry> entries;  // indexed by k = 0..|V|

  bool all_verified() const;
};

struct ExhaustiveOptions {
  /// Largest order accepted. n = 6 (2^28 subsets) must be opted into.
  int max_order = 5;
  unsigned threads = 1;
};

/// Hard ceiling on the exhaustive enumeration regardless of options.
inline constexpr int kExhaustiveHardLimit = 6;

/// Enumerates every subset of V(T_n), recording the per-cardinality minimum
/// boundary with a witness, and compares it with the packing minimum.
/// Throws std::invalid_argument when n exceeds the configured limit.
MinBoundaryTable exhaustive_min_boundary(const TriGrid& g, const ExhaustiveOptions& options = {});

struct SampleViolation {
  std::uint64_t sample = 0;
  std::size_t size = 0;
  std::size_t boundary = 0;
  std::size_t packing_min = 0;
  VertexSet set;
};

struct SampledReport {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Per cardinality: number of samples drawn and the smallest boundary seen.
  std::vector<std::uint64_t> drawn;
  std::vector<std::optional<std::size_t>> min_seen;
  std::vector<std::size_t> packing_min;
  std::vector<SampleViolation> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr int kSampledOrderLimit = 30;

/// Draws uniformly random subsets (each vertex kept with probability 1/2,
/// from std::mt19937_64 seeded with `seed`) and checks
/// |boundary(A)| >= packing_minimum(|A|).
SampledReport sampled_check(const TriGrid& g, std::uint64_t samples, std::uint64_t seed);

struct SegmentPart {
  /// Minimum of |N(A)| - |N(segment(|A|))| over the admissible A of each
  /// cardinality; empty when no admissible set has that size.
  std::vector<std::optional<long>> min_slack;
  std::uint64_t sets_checked = 0;
  std::uint64_t violations = 0;
};

struct SegmentReport {
  int n = 0;
  SegmentPart avoiding_diagonal;   // compared against initial segments
  SegmentPart containing_diagonal; // compared against final segments

  bool ok() const { return avoiding_diagonal.violations == 0 && containing_diagonal.violations == 0; }
};

inline constexpr int kSegmentOrderLimit = 4;

/// Exhaustive check of segment minimality for sets that avoid, respectively
/// contain, the diagonal |x| = n. Requires n <= 4.
SegmentReport segment_minimality_check(const TriGrid& g);

/// True iff every s with i < s < i + m, i = (m+1) + ... + (n+1), has
/// packing_min(s) >= m. Together with the isoperimetric inequality this
/// certifies that the inspection number exceeds m. Accepts 0 <= m <= n+1; an
/// empty window is vacuously certified.
bool lower_bound_certificate(const TriGrid& g, std::size_t m);
bool lower_bound_certificate(const TriGrid& g, std::size_t m,
                             const std::vector<std::size_t>& packing_table);

}  // namespace trigrid
