#pragma once

#include <cstddef>
#include <vector>

#include "structctl/bigraph.hpp"

namespace structctl {

/// G_nr: the graph with every redundant edge removed.
///
/// An edge is redundant when it lies in no matching of cardinality
/// `base_rank` (the term rank of the original graph). For a full row term
/// rank graph these are exactly the edges in no R-saturating matching.
struct ReducedGraph {
  WeightedBigraph graph;
  std::vector<Edge> redundant;  // sorted by (row, col)
  std::size_t base_rank = 0;
};

struct ReductionOptions {
  /// When an edge is found non-redundant, also mark every edge of the
  /// completing matching; drop redundant edges from later searches at once.
  /// Produces the same ReducedGraph as the plain per-edge sweep.
  bool mark_matched = false;
};

/// True iff the edge (row, col) lies in no matching of `base_rank` edges.
/// `base_rank` must be term_rank(g). Throws InputError if the edge is absent.
bool classify_edge(const WeightedBigraph& g, Index row, Index col, std::size_t base_rank);

ReducedGraph remove_redundant_edges(const WeightedBigraph& g, const ReductionOptions& options = {});

/// Maximal connected subgraph of G_nr. Vertex and edge lists are ascending.
struct Component {
  std::vector<Index> rows;
  std::vector<Index> cols;
  std::vector<Edge> edges;
};

/// Components of the reduced graph, isolated vertices included as singletons.
/// Ordered by smallest member vertex, counting rows 0..p-1 before columns.
std::vector<Component> connected_components(const ReducedGraph& rg);
std::vector<Component> connected_components(const WeightedBigraph& g);

}  // namespace structctl
