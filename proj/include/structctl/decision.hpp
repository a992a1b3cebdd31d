#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "structctl/pattern.hpp"
#include "structctl/errors.hpp"
#include "structctl/reduction.hpp"

namespace structctl {

enum class Verdict { structurally_controllable, structurally_uncontrollable };

/// "structurally_controllable" / "structurally_uncontrollable".
std::string_view to_string(Verdict v);
/// Human-readable form printed by the CLI: underscores become spaces.
std::string_view to_phrase(Verdict v);

struct ComponentSummary {
  std::vector<Index> rows;
  std::vector<Index> cols;
  std::size_t edge_count = 0;
  /// Largest edge weight; empty for an isolated vertex.
  std::optional<Degree> max_weight;

  bool is_square() const noexcept { return !rows.empty() && rows.size() == cols.size(); }
};

/// A square component of G_nr holding an edge of positive weight.
struct Witness {
  std::size_t component = 0;
  Edge edge;
};

struct AnalysisReport {
  Verdict verdict = Verdict::structurally_controllable;
  bool minimal = true;  // term rank equals the number of rows
  std::size_t term_rank = 0;
  std::vector<Edge> redundant_edges;
  std::vector<ComponentSummary> components;
  std::optional<Witness> witness;  // present iff uncontrollable
};

struct AnalysisOptions {
  ReductionOptions reduction;
};

/// Thrown by analyze() when the graph has no edges at all.
class ZeroTermRankError : public InputError {
 public:
  ZeroTermRankError() : InputError("term rank is zero: the pattern has no nonzero entries") {}
};

/// Square pattern with at least one perfect matching. Throws InputError if
/// the pattern is not square.
bool generic_nonsingular(const PolyPattern& p);

/// Square pattern that is generically nonsingular and whose reduced graph
/// has only weight-zero edges (every perfect matching uses constants only).
bool generic_unimodular(const PolyPattern& p);

/// Brute-force forced-subset condition. For every row subset r that all
/// R-saturating matchings send onto one common column set, the edges of G_nr
/// incident on r must all have weight zero.
///
/// Requires full row term rank (InputError otherwise) and at most
/// `max_rows` rows (GuardError otherwise).
bool property_p_holds(const PolyPattern& p, Index max_rows = 8);

/// Component-based decision procedure.
///
/// The pattern is controllable iff every component g of G_nr with
/// |R(g)| = |C(g)| carries only weight-zero edges. Rank-deficient and tall
/// patterns go through the same path, with redundancy measured against
/// matchings of size term_rank.
AnalysisReport analyze(const PolyPattern& p, const AnalysisOptions& options = {});

/// Test-only bridge: property_p_holds(p) == (analyze(p) is controllable).
bool forced_subset_equiv_check(const PolyPattern& p, Index max_rows = 8);

}  // namespace structctl
