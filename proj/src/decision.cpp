#include "structctl/decision.hpp"

#include <algorithm>
#include <string>

#include "structctl/errors.hpp"

namespace structctl {

std::string_view to_string(Verdict v) {
  return v == Verdict::structurally_controllable ? "structurally_controllable" : "structurally_uncontrollable";
}

std::string_view to_phrase(Verdict v) {
  return v == Verdict::structurally_controllable ? "structurally controllable" : "structurally uncontrollable";
}

namespace {

void require_square(const PolyPattern& p) {
  if (p.rows() != p.cols()) {
    throw InputError("expected a square pattern, got " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()));
  }
}

bool all_weights_zero(std::span<const Edge> edges) {
  return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.weight == 0; });
}

}  // namespace

bool generic_nonsingular(const PolyPattern& p) {
  require_square(p);
  return term_rank(build_graph(p)) == static_cast<std::size_t>(p.rows());
}

bool generic_unimodular(const PolyPattern& p) {
  if (!generic_nonsingular(p)) return false;
  const ReducedGraph rg = remove_redundant_edges(build_graph(p));
  return all_weights_zero(rg.graph.edges());
}

bool property_p_holds(const PolyPattern& p, Index max_rows) {
  if (p.rows() > max_rows) {
    throw GuardError("property P brute force limited to " + std::to_string(max_rows) + " rows");
  }
  const WeightedBigraph g = build_graph(p);
  const auto rows = static_cast<std::size_t>(p.rows());
  if (term_rank(g) != rows) throw InputError("property P needs full row term rank");

  // G and G_nr have the same R-saturating matchings.
  const ReducedGraph rg = remove_redundant_edges(g);
  const auto matchings = enumerate_saturating_matchings(rg.graph, rows, max_rows);

  // Column assigned to each row, per matching (pairs are sorted by row and
  // cover every row).
  const auto column_of = [&](const Matching& m, std::size_t row) { return m.pairs[row].col; };

  for (std::uint32_t subset = 1; subset < (1u << rows); ++subset) {
    std::vector<Index> image;
    for (std::size_t r = 0; r < rows; ++r) {
      if (subset & (1u << r)) image.push_back(column_of(matchings.front(), r));
    }
    std::sort(image.begin(), image.end());
    const bool forced = std::all_of(matchings.begin(), matchings.end(), [&](const Matching& m) {
      std::vector<Index> other;
      for (std::size_t r = 0; r < rows; ++r) {
        if (subset & (1u << r)) other.push_back(column_of(m, r));
      }
      std::sort(other.begin(), other.end());
      return other == image;
    });
    if (!forced) continue;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!(subset & (1u << r))) continue;
      for (auto id : rg.graph.row_edges(static_cast<Index>(r))) {
        if (rg.graph.edge(id).weight != 0) return false;
      }
    }
  }
  return true;
}

AnalysisReport analyze(const PolyPattern& p, const AnalysisOptions& options) {
  const WeightedBigraph g = build_graph(p);
  if (g.edge_count() == 0) throw ZeroTermRankError();

  const ReducedGraph rg = remove_redundant_edges(g, options.reduction);
  AnalysisReport report;
  report.term_rank = rg.base_rank;
  report.minimal = rg.base_rank == static_cast<std::size_t>(p.rows());
  report.redundant_edges = rg.redundant;

  for (Component& comp : connected_components(rg)) {
    ComponentSummary summary;
    summary.rows = std::move(comp.rows);
    summary.cols = std::move(comp.cols);
    summary.edge_count = comp.edges.size();
    for (const Edge& e : comp.edges) {
      summary.max_weight = std::max(summary.max_weight.value_or(0), e.weight);
    }
    if (!report.witness && summary.is_square() && !all_weights_zero(comp.edges)) {
      // Edges are sorted by (row, col): the first heavy one is the smallest.
      const auto heavy = std::find_if(comp.edges.begin(), comp.edges.end(), [](const Edge& e) { return e.weight > 0; });
      report.witness = Witness{report.components.size(), *heavy};
    }
    report.components.push_back(std::move(summary));
  }
  report.verdict = report.witness ? Verdict::structurally_uncontrollable : Verdict::structurally_controllable;
  return report;
}

bool forced_subset_equiv_check(const PolyPattern& p, Index max_rows) {
  const bool brute_force = property_p_holds(p, max_rows);
  const bool components = analyze(p).verdict == Verdict::structurally_controllable;
  return brute_force == components;
}

}  // namespace structctl
