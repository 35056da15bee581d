#include "trigrid/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "trigrid/order.hpp"

namespace trigrid {

MaskNeighborhood::MaskNeighborhood(const TriGrid& g) {
  const std::size_t count = g.vertex_count();
  if (count > 64) throw std::invalid_argument("mask neighbourhoods need at most 64 vertices");
  std::vector<std::uint64_t> closed(count);
  for (VertexId v = 0; v < count; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (const VertexId u : g.neighbor_ids(v)) closed[v] |= std::uint64_t{1} << u;
  }
  const std::size_t chunks = (count + kChunkBits - 1) / kChunkBits;
  tables_.assign(chunks, std::vector<std::uint64_t>(std::size_t{1} << kChunkBits, 0));
  for (std::size_t c = 0; c < chunks; ++c) {
    auto& table = tables_[c];
    // table[x] = table[x without its lowest bit] | closed[that bit]
    for (std::size_t x = 1; x < table.size(); ++x) {
      const auto low = static_cast<std::size_t>(std::countr_zero(x));
      const std::size_t v = c * kChunkBits + low;
      table[x] = table[x & (x - 1)] | (v < count ? closed[v] : 0);
    }
  }
}

std::size_t MaskNeighborhood::boundary_size(std::uint64_t mask) const {
  return static_cast<std::size_t>(std::popcount((*this)(mask)) - std::popcount(mask));
}

bool MinBoundaryTable::all_verified() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.verified; });
}

namespace {

struct Best {
  std::size_t boundary = std::numeric_limits<std::size_t>::max();
  std::uint64_t mask = 0;

  void offer(std::size_t b, std::uint64_t m) {
    if (b < boundary || (b == boundary && m < mask)) {
      boundary = b;
      mask = m;
    }
  }
};

void scan_range(const MaskNeighborhood& nbhd, std::uint64_t begin, std::uint64_t end,
                std::vector<Best>& best) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    best[size].offer(nbhd.boundary_size(mask), mask);
  }
}

}  // namespace

MinBoundaryTable exhaustive_min_boundary(const TriGrid& g, const ExhaustiveOptions& options) {
  const int n = g.order();
  const int limit = std::min(options.max_order, kExhaustiveHardLimit);
  if (n > limit) {
    throw std::invalid_argument("exhaustive enumeration is limited to n <= " + std::to_string(limit) +
                                " (got n = " + std::to_string(n) +
                                "); use the sampled check for larger grids");
  }
  const std::size_t count = g.vertex_count();
  const MaskNeighborhood nbhd(g);
  const std::uint64_t total = std::uint64_t{1} << count;
  const unsigned threads = std::max(1u, options.threads);

  std::vector<std::vector<Best>> shards(threads, std::vector<Best>(count + 1));
  if (threads == 1) {
    scan_range(nbhd, 0, total, shards[0]);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t step = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, step * t);
      const std::uint64_t end = std::min(total, begin + step);
      workers.emplace_back([&, begin, end, t] { scan_range(nbhd, begin, end, shards[t]); });
    }
    for (auto& w : workers) w.join();
  }

  const std::vector<std::size_t> packing = packing_minimum_table(g);
  MinBoundaryTable table{n, {}};
  table.entries.reserve(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    Best merged;
    for (const auto& shard : shards) merged.offer(shard[k].boundary, shard[k].mask);
    table.entries.push_back(
        {k, merged.boundary, packing[k], merged.mask, merged.boundary == packing[k]});
  }
  return table;
}

SampledReport sampled_check(const TriGrid& g, std::uint64_t samples, std::uint64_t seed) {
  if (g.order() > kSampledOrderLimit) {
    throw std::invalid_argument("sampled check is limited to n <= " + std::to_string(kSampledOrderLimit));
  }
  const std::size_t count = g.vertex_count();
  SampledReport report;
  report.n = g.order();
  report.samples = samples;
  report.seed = seed;
  report.drawn.assign(count + 1, 0);
  report.min_seen.assign(count + 1, std::nullopt);
  report.packing_min = packing_minimum_table(g);

  // Raw engine output only: distributions are implementation-defined, the
  // engine sequence is not.
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    VertexSet a = g.empty_set();
    for (std::size_t base = 0; base < count; base += 64) {
      const std::uint64_t bits = rng();
      for (std::size_t b = 0; b < 64 && base + b < count; ++b) {
        if ((bits >> b) & 1u) a.insert(static_cast<VertexId>(base + b));
      }
    }
    const std::size_t size = a.size();
    const std::size_t bsize = boundary(g, a).size();
    ++report.drawn[size];
    if (!report.min_seen[size] || bsize < *report.min_seen[size]) report.min_seen[size] = bsize;
    if (bsize < report.packing_min[size]) {
      report.violations.push_back({s, size, bsize, report.packing_min[size], a});
    }
  }
  return report;
}

SegmentReport segment_minimality_check(const TriGrid& g) {
  const int n = g.order();
  if (n > kSegmentOrderLimit) {
    throw std::invalid_argument("segment minimality check is limited to n <= " + std::to_string(kSegmentOrderLimit));
  }
  const std::size_t count = g.vertex_count();
  const MaskNeighborhood nbhd(g);
  const SimplicialOrder order(g);

  std::uint64_t diagonal = 0;
  for (int c = 0; c <= n; ++c) diagonal |= std::uint64_t{1} << g.id(Coord{c, n - c});

  std::vector<std::size_t> initial_nbhd(count + 1);
  std::vector<std::size_t> final_nbhd(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    initial_nbhd[k] = neighborhood(g, order.initial_segment(k)).size();
    final_nbhd[k] = neighborhood(g, order.final_segment(k)).size();
  }

  SegmentReport report;
  report.n = n;
  report.avoiding_diagonal.min_slack.assign(count + 1, std::nullopt);
  report.containing_diagonal.min_slack.assign(count + 1, std::nullopt);

  auto record = [](SegmentPart& part, std::size_t size, long slack) {
    ++part.sets_checked;
    auto& slot = part.min_slack[size];
    if (!slot || slack < *slot) slot = slack;
    if (slack < 0) ++part.violations;
  };

  const std::uint64_t total = std::uint64_t{1} << count;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    const auto nsize = static_cast<long>(std::popcount(nbhd(mask)));
    if ((mask & diagonal) == 0) {
      record(report.avoiding_diagonal, size, nsize - static_cast<long>(initial_nbhd[size]));
    } else if ((mask & diagonal) == diagonal) {
      record(report.containing_diagonal, size, nsize - static_cast<long>(final_nbhd[size]));
    }
  }
  return report;
}

bool lower_bound_certificate(const TriGrid& g, std::size_t m,
                             const std::vector<std::size_t>& packing_table) {
  const auto n = static_cast<std::size_t>(g.order());
  if (m > n + 1) {
    throw std::out_of_range("certificate needs 0 <= m <= n + 1, got m = " + std::to_string(m));
  }
  if (packing_table.size() != g.vertex_count() + 1) {
    throw std::invalid_argument("packing table does not match the grid");
  }
  // i = (m+1) + ... + (n+1)
  const std::size_t i = triangular(n + 1) - triangular(m);
  for (std::size_t s = i + 1; s < i + m; ++s) {
    if (packing_table[s] < m) return false;
  }
  return true;
}

bool lower_bound_certificate(const TriGrid& g, std::size_t m) {
  return lower_bound_certificate(g, m, packing_minimum_table(g));
}

}  // namespace trigrid
