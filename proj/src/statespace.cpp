#include "structctl/statespace.hpp"

#include <algorithm>
#include <string>

#include "structctl/errors.hpp"

namespace structctl {

PolyPattern build_pencil_pattern(const StateSpacePattern& ss) {
  const Index n = ss.states();
  PolyPattern p(n, n + ss.inputs());
  for (Index i = 0; i < n; ++i) p.add_entry(i, i, 1);
  for (const Position& a : ss.a_entries()) {
    if (a.row != a.col) p.add_entry(a.row, a.col, 0);
  }
  for (const Position& b : ss.b_entries()) p.add_entry(b.row, n + b.col, 0);
  return p;
}

bool StateSpaceReport::all_states_connected() const {
  return std::all_of(state_connected.begin(), state_connected.end(), [](bool c) { return c; });
}

StateSpaceReport statespace_analyze(const StateSpacePattern& ss, const AnalysisOptions& options) {
  StateSpaceReport report;
  report.base = analyze(build_pencil_pattern(ss), options);
  const Index n = ss.states();
  report.state_connected.assign(static_cast<std::size_t>(n), false);
  for (const ComponentSummary& comp : report.base.components) {
    const bool has_input =
        std::any_of(comp.cols.begin(), comp.cols.end(), [n](Index c) { return c >= n; });
    if (!has_input) continue;
    for (Index c : comp.cols) {
      if (c < n) report.state_connected[c] = true;
    }
  }
  return report;
}

StateSpacePattern gen_controller_canonical(Index n) {
  if (n < 1) throw InputError("controller canonical form needs n >= 1");
  StateSpacePattern ss(n, 1);
  for (Index i = 0; i + 1 < n; ++i) ss.add_a(i, i + 1);
  for (Index j = 0; j < n; ++j) ss.add_a(n - 1, j);
  ss.add_b(n - 1, 0);
  return ss;
}

StateSpacePattern gen_gilbert(Index n) {
  if (n < 2) throw InputError("Gilbert form needs n >= 2");
  StateSpacePattern ss(n, 1);
  for (Index i = 0; i < n; ++i) ss.add_a(i, i);
  ss.add_a(0, 1);
  ss.add_b(1, 0);
  return ss;
}

Interconnection parse_interconnection(std::string_view kind) {
  if (kind == "series") return Interconnection::series;
  if (kind == "parallel") return Interconnection::parallel;
  if (kind == "feedback") return Interconnection::feedback;
  throw InputError("unknown interconnection kind '" + std::string(kind) + "'");
}

std::string_view to_string(Interconnection kind) {
  switch (kind) {
    case Interconnection::series:
      return "series";
    case Interconnection::parallel:
      return "parallel";
    case Interconnection::feedback:
      return "feedback";
  }
  return "";
}

PolyPattern gen_interconnection(Interconnection kind, Degree n1, Degree n2) {
  if (n1 < 1 || n2 < 1) throw InputError("subsystem orders must be >= 1");
  const Degree p1 = n1, q1 = n1 - 1, p2 = n2, q2 = n2 - 1;
  switch (kind) {
    case Interconnection::series: {
      // w = (r, v, y): q1 r = p1 v, q2 v = p2 y
      PolyPattern m(2, 3);
      m.add_entry(0, 0, q1);
      m.add_entry(0, 1, p1);
      m.add_entry(1, 1, q2);
      m.add_entry(1, 2, p2);
      return m;
    }
    case Interconnection::parallel: {
      // w = (u, v, r, y): p1 u = q1 r, p2 v = q2 r, y = u + v
      PolyPattern m(3, 4);
      m.add_entry(0, 0, p1);
      m.add_entry(0, 2, q1);
      m.add_entry(1, 1, p2);
      m.add_entry(1, 2, q2);
      m.add_entry(2, 0, 0);
      m.add_entry(2, 1, 0);
      m.add_entry(2, 3, 0);
      return m;
    }
    case Interconnection::feedback: {
      // w = (y, e, v, r): e = r - v, p1 y = q1 e, p2 v = q2 y
      PolyPattern m(3, 4);
      m.add_entry(0, 1, 0);
      m.add_entry(0, 2, 0);
      m.add_entry(0, 3, 0);
      m.add_entry(1, 0, p1);
      m.add_entry(1, 1, q1);
      m.add_entry(2, 0, q2);
      m.add_entry(2, 2, p2);
      return m;
    }
  }
  throw InputError("unknown interconnection kind");
}

}  // namespace structctl
