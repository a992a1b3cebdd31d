#include "structctl/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "structctl/disjoint_set.hpp"
#include "structctl/errors.hpp"

namespace structctl {

namespace {

// Size of a maximum matching once both endpoints of `e` are deleted.
std::size_t rank_without_endpoints(const WeightedBigraph& g, const Edge& e, std::span<const unsigned char> alive) {
  MatchingFilter filter;
  filter.skip_row = e.row;
  filter.skip_col = e.col;
  filter.edge_alive = alive;
  return max_matching(g, filter).size();
}

ReducedGraph assemble(const WeightedBigraph& g, const EdgeFlags& redundant, std::size_t base_rank) {
  ReducedGraph out;
  out.base_rank = base_rank;
  EdgeFlags keep(g.edge_count());
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    keep[id] = !redundant[id];
    if (redundant[id]) out.redundant.push_back(g.edge(id));
  }
  out.graph = g.subgraph(keep);
  return out;
}

}  // namespace

bool classify_edge(const WeightedBigraph& g, Index row, Index col, std::size_t base_rank) {
  const auto id = g.find_edge(row, col);
  if (!id) {
    throw InputError("edge (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ") not in graph");
  }
  // e extends to a base_rank matching iff the rest supports base_rank - 1 edges.
  return rank_without_endpoints(g, g.edge(*id), {}) + 1 < base_rank;
}

ReducedGraph remove_redundant_edges(const WeightedBigraph& g, const ReductionOptions& options) {
  const std::size_t base_rank = term_rank(g);
  const std::size_t n = g.edge_count();
  EdgeFlags redundant(n, 0);

  if (!options.mark_matched) {
    for (std::size_t id = 0; id < n; ++id) {
      redundant[id] = rank_without_endpoints(g, g.edge(id), {}) + 1 < base_rank ? 1 : 0;
    }
    return assemble(g, redundant, base_rank);
  }

  // Removing a redundant edge never changes the set of base_rank matchings,
  // so later searches may run on the thinned graph.
  EdgeFlags alive(n, 1);
  EdgeFlags settled(n, 0);
  for (std::size_t id = 0; id < n; ++id) {
    if (settled[id]) continue;
    const Edge& e = g.edge(id);
    MatchingFilter filter;
    filter.skip_row = e.row;
    filter.skip_col = e.col;
    filter.edge_alive = alive;
    const Matching rest = max_matching(g, filter);
    settled[id] = 1;
    if (rest.size() + 1 < base_rank) {
      redundant[id] = 1;
      alive[id] = 0;
      continue;
    }
    // rest + e is a base_rank matching, so every edge in it is non-redundant.
    for (const auto& pair : rest.pairs) {
      if (auto other = g.find_edge(pair.row, pair.col)) settled[*other] = 1;
    }
  }
  return assemble(g, redundant, base_rank);
}

std::vector<Component> connected_components(const ReducedGraph& rg) { return connected_components(rg.graph); }

std::vector<Component> connected_components(const WeightedBigraph& g) {
  const auto rows = static_cast<std::size_t>(g.rows());
  const auto cols = static_cast<std::size_t>(g.cols());
  DisjointSet sets(rows + cols);
  for (const Edge& e : g.edges()) sets.unite(static_cast<std::size_t>(e.row), rows + static_cast<std::size_t>(e.col));

  // Scanning vertices in global order assigns component ids by smallest member.
  std::map<std::size_t, std::size_t> slot_of_root;
  std::vector<Component> out;
  std::vector<std::size_t> slot_of_vertex(rows + cols);
  for (std::size_t v = 0; v < rows + cols; ++v) {
    const std::size_t root = sets.find(v);
    auto [it, inserted] = slot_of_root.emplace(root, out.size());
    if (inserted) out.emplace_back();
    slot_of_vertex[v] = it->second;
    Component& comp = out[it->second];
    if (v < rows) {
      comp.rows.push_back(static_cast<Index>(v));
    } else {
      comp.cols.push_back(static_cast<Index>(v - rows));
    }
  }
  for (const Edge& e : g.edges()) out[slot_of_vertex[static_cast<std::size_t>(e.row)]].edges.push_back(e);
  return out;
}

}  // namespace structctl
