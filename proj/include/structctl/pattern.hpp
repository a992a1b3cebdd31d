#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace structctl {

using Index = std::int32_t;
using Degree = std::int32_t;

/// Zero-based (row, column) position. Ordered row-major.
struct Position {
  Index row = 0;
  Index col = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Sparsity and degree structure of a p x v polynomial matrix.
///
/// A present entry with degree 0 is a nonzero constant; an absent entry is the
/// zero polynomial. The two are never conflated.
class PolyPattern {
 public:
  using Entries = std::map<Position, Degree>;

  PolyPattern() = default;
  /// Throws InputError unless rows, cols >= 1.
  PolyPattern(Index rows, Index cols);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t entry_count() const noexcept { return entries_.size(); }

  bool contains(Index row, Index col) const { return entries_.count({row, col}) != 0; }
  /// Degree of a present entry; throws InputError if the entry is absent.
  Degree degree(Index row, Index col) const;

  /// Inserts a new entry. Throws InputError on out-of-range index, negative
  /// degree, or an already present position.
  void add_entry(Index row, Index col, Degree degree);

  friend bool operator==(const PolyPattern&, const PolyPattern&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Entries entries_;
};

/// Positions of the nonzero entries of A (n x n) and B (n x m) in dx/dt = Ax + Bu.
class StateSpacePattern {
 public:
  StateSpacePattern() = default;
  StateSpacePattern(Index states, Index inputs);

  Index states() const noexcept { return states_; }
  Index inputs() const noexcept { return inputs_; }
  const std::set<Position>& a_entries() const noexcept { return a_; }
  const std::set<Position>& b_entries() const noexcept { return b_; }

  void add_a(Index row, Index col);
  void add_b(Index row, Index input);

  friend bool operator==(const StateSpacePattern&, const StateSpacePattern&) = default;

 private:
  Index states_ = 0;
  Index inputs_ = 0;
  std::set<Position> a_;
  std::set<Position> b_;
};

// Text formats. Indices are 1-based on disk; '#' starts a comment line and
// blank lines are skipped.
//
//   pattern <p> <v>            statespace <n> <m>
//   entry <i> <j> <degree>     a <i> <j>
//                              b <i> <k>

PolyPattern parse_pattern(std::istream& in);
PolyPattern parse_pattern(std::string_view text);
StateSpacePattern parse_statespace(std::istream& in);
StateSpacePattern parse_statespace(std::string_view text);

/// Canonical form: header line, then entries in row-major order, LF-terminated.
std::string emit_pattern(const PolyPattern& p);
std::string emit_statespace(const StateSpacePattern& ss);

/// The pattern with row `row` appended again at the bottom (same columns and
/// degrees).
PolyPattern duplicate_row(const PolyPattern& p, Index row);

}  // namespace structctl
