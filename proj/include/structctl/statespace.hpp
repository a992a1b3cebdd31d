#pragma once

#include <string_view>
#include <vector>

#include "structctl/decision.hpp"
#include "structctl/pattern.hpp"

namespace structctl {

/// Pattern of the pencil [sI - A, B]: n rows, n + m columns.
///
/// Every diagonal entry is present with degree 1 (whether or not A_ii is
/// nonzero); off-diagonal A entries and B entries have degree 0. Column
/// n + k belongs to input k.
PolyPattern build_pencil_pattern(const StateSpacePattern& ss);

struct StateSpaceReport {
  AnalysisReport base;
  /// state_connected[i]: column vertex x_i shares a G_nr component with some
  /// input vertex.
  std::vector<bool> state_connected;

  bool all_states_connected() const;
};

StateSpaceReport statespace_analyze(const StateSpacePattern& ss, const AnalysisOptions& options = {});

/// Controller canonical form: ones on the superdiagonal, a full last row,
/// B = e_n.
StateSpacePattern gen_controller_canonical(Index n);

/// Gilbert-style diagonal form with one 2x2 Jordan block on states 1, 2 and
/// the input entering state 2. States 3..n are decoupled diagonal entries.
StateSpacePattern gen_gilbert(Index n);

enum class Interconnection { series, parallel, feedback };

/// Throws InputError for anything but "series", "parallel", "feedback".
Interconnection parse_interconnection(std::string_view kind);
std::string_view to_string(Interconnection kind);

/// Kernel pattern of two SISO systems q1/p1, q2/p2 joined in series, in
/// parallel, or in a feedback loop. deg p_i = n_i and deg q_i = n_i - 1.
PolyPattern gen_interconnection(Interconnection kind, Degree n1, Degree n2);

}  // namespace structctl
