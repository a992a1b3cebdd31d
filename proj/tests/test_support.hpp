#pragma once

// Helpers shared by the unit tests: literal pattern builders, seeded random
// instance families, and a brute-force matching oracle that enumerates edge
// subsets directly (independent of the library's row-by-row enumerator).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "structctl/pattern.hpp"

namespace structctl::testing {

/// Entries given 1-based as (row, col, degree).
inline PolyPattern make_pattern(Index rows, Index cols, std::initializer_list<std::tuple<int, int, int>> entries) {
  PolyPattern p(rows, cols);
  for (const auto& [i, j, d] : entries) p.add_entry(i - 1, j - 1, d);
  return p;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(STRUCTCTL_FIXTURES) + "/" + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

using PositionSet = std::vector<Position>;

/// Every matching of exactly `size` edges, found by scanning all edge subsets.
inline std::vector<PositionSet> brute_force_matchings(const PolyPattern& p, std::size_t size) {
  std::vector<Position> edges;
  for (const auto& [pos, degree] : p.entries()) edges.push_back(pos);
  std::vector<PositionSet> out;
  const std::uint32_t limit = 1u << edges.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    std::set<Index> rows, cols;
    PositionSet chosen;
    bool ok = true;
    for (std::size_t k = 0; k < edges.size() && ok; ++k) {
      if (!(mask & (1u << k))) continue;
      ok = rows.insert(edges[k].row).second && cols.insert(edges[k].col).second;
      chosen.push_back(edges[k]);
    }
    if (ok) out.push_back(chosen);
  }
  return out;
}

inline std::size_t brute_force_term_rank(const PolyPattern& p) {
  std::size_t best = 0;
  for (std::size_t k = 1; k <= p.entry_count(); ++k) {
    if (brute_force_matchings(p, k).empty()) break;
    best = k;
  }
  return best;
}

/// Edges in no maximum-cardinality matching.
inline std::set<Position> brute_force_redundant(const PolyPattern& p) {
  const auto maximum = brute_force_matchings(p, brute_force_term_rank(p));
  std::set<Position> used;
  for (const auto& m : maximum) used.insert(m.begin(), m.end());
  std::set<Position> out;
  for (const auto& [pos, degree] : p.entries()) {
    if (!used.count(pos)) out.insert(pos);
  }
  return out;
}

/// Random pattern with 1..max_rows rows, 1..max_cols columns, at least one
/// and at most max_edges entries, degrees in [0, max_degree].
inline PolyPattern random_small_pattern(std::mt19937_64& rng, Index max_rows, Index max_cols, std::size_t max_edges,
                                        Degree max_degree) {
  std::uniform_int_distribution<Index> row_count(1, max_rows);
  std::uniform_int_distribution<Index> col_count(1, max_cols);
  const Index rows = row_count(rng);
  const Index cols = col_count(rng);
  const std::size_t cells = static_cast<std::size_t>(rows) * cols;
  std::uniform_int_distribution<std::size_t> edge_count(1, std::min(cells, max_edges));
  std::vector<int> order(cells);
  for (std::size_t k = 0; k < cells; ++k) order[k] = static_cast<int>(k);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<Degree> degree(0, max_degree);
  PolyPattern p(rows, cols);
  const std::size_t e = edge_count(rng);
  for (std::size_t k = 0; k < e; ++k) p.add_entry(order[k] / cols, order[k] % cols, degree(rng));
  return p;
}

/// Random square pattern of size 1..max_n.
inline PolyPattern random_square_pattern(std::mt19937_64& rng, Index max_n, Degree max_degree) {
  std::uniform_int_distribution<Index> size(1, max_n);
  const Index n = size(rng);
  std::bernoulli_distribution present(0.5);
  std::uniform_int_distribution<Degree> degree(0, max_degree);
  PolyPattern p(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (present(rng)) p.add_entry(i, j, degree(rng));
    }
  }
  return p;
}

inline StateSpacePattern random_statespace(std::mt19937_64& rng, Index max_n, Index max_m, double density = 0.3) {
  std::uniform_int_distribution<Index> states(1, max_n);
  std::uniform_int_distribution<Index> inputs(1, max_m);
  std::bernoulli_distribution present(density);
  StateSpacePattern ss(states(rng), inputs(rng));
  for (Index i = 0; i < ss.states(); ++i) {
    for (Index j = 0; j < ss.states(); ++j) {
      if (present(rng)) ss.add_a(i, j);
    }
    for (Index k = 0; k < ss.inputs(); ++k) {
      if (present(rng)) ss.add_b(i, k);
    }
  }
  return ss;
}

/// Rows and columns relabelled: new row perm_r[i] holds old row i.
inline PolyPattern permute(const PolyPattern& p, const std::vector<Index>& perm_r, const std::vector<Index>& perm_c) {
  PolyPattern out(p.rows(), p.cols());
  for (const auto& [pos, degree] : p.entries()) out.add_entry(perm_r[pos.row], perm_c[pos.col], degree);
  return out;
}

}  // namespace structctl::testing
