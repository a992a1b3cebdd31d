#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "structctl/pattern.hpp"

namespace structctl {

/// One flag per edge id (nonzero = set). std::vector<bool> has no contiguous storage.
using EdgeFlags = std::vector<unsigned char>;

/// Row vertex `row` joined to column vertex `col`; weight is the entry degree.
struct Edge {
  Index row = 0;
  Index col = 0;
  Degree weight = 0;

  Position position() const noexcept { return {row, col}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartite graph G = (R, C; E) with non-negative integer edge weights.
///
/// Edges are stored sorted by (row, col) and are unique per pair. The per-row
/// and per-column incidence lists hold edge ids in ascending order of the
/// opposite endpoint, which makes every traversal below deterministic.
class WeightedBigraph {
 public:
  using EdgeId = std::size_t;

  WeightedBigraph() = default;
  /// Throws InputError on duplicate pairs, negative weights or bad indices.
  WeightedBigraph(Index rows, Index cols, std::vector<Edge> edges);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const EdgeId> row_edges(Index row) const;
  std::span<const EdgeId> col_edges(Index col) const;

  std::optional<EdgeId> find_edge(Index row, Index col) const;

  /// Same vertex sets; only the edges with keep[id] set survive.
  WeightedBigraph subgraph(std::span<const unsigned char> keep) const;

  friend bool operator==(const WeightedBigraph& a, const WeightedBigraph& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.edges_ == b.edges_;
  }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<Edge> edges_;
  // CSR-style incidence: ids for row r live in row_ids_[row_start_[r] .. row_start_[r+1]).
  std::vector<std::size_t> row_start_;
  std::vector<EdgeId> row_ids_;
  std::vector<std::size_t> col_start_;
  std::vector<EdgeId> col_ids_;
};

/// Vertex-disjoint set of (row, col) pairs, kept sorted by row.
struct Matching {
  std::vector<Position> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool contains(Index row, Index col) const;
  /// True iff no two pairs share a row or a column.
  bool is_valid() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// One edge per pattern entry, weight = entry degree.
WeightedBigraph build_graph(const PolyPattern& p);

/// Restricts a matching search to part of a graph without copying it.
struct MatchingFilter {
  std::optional<Index> skip_row;
  std::optional<Index> skip_col;
  /// Indexed by edge id; empty means every edge is usable.
  std::span<const unsigned char> edge_alive;
};

/// Maximum-cardinality matching by Hopcroft-Karp phases, O(E sqrt(V)).
/// Ties are broken by ascending adjacency order, so the result is reproducible.
Matching max_matching(const WeightedBigraph& g);
Matching max_matching(const WeightedBigraph& g, const MatchingFilter& filter);

/// Size of a maximum matching: the generic rank of the underlying matrix.
std::size_t term_rank(const WeightedBigraph& g);

/// Every matching of exactly `size` edges, in lexicographic order of the
/// row-sorted pair lists. Exponential; throws GuardError above `max_rows` rows.
std::vector<Matching> enumerate_saturating_matchings(const WeightedBigraph& g, std::size_t size,
                                                     Index max_rows = 8);

}  // namespace structctl
