#include "structctl/pattern.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "structctl/errors.hpp"

namespace structctl {

PolyPattern::PolyPattern(Index rows, Index cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw InputError("pattern dimensions must be positive");
  }
}

Degree PolyPattern::degree(Index row, Index col) const {
  auto it = entries_.find({row, col});
  if (it == entries_.end()) {
    throw InputError("no entry at (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")");
  }
  return it->second;
}

void PolyPattern::add_entry(Index row, Index col, Degree degree) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw InputError("entry index out of range");
  }
  if (degree < 0) {
    throw InputError("entry degree must be non-negative");
  }
  if (!entries_.emplace(Position{row, col}, degree).second) {
    throw InputError("duplicate entry");
  }
}

StateSpacePattern::StateSpacePattern(Index states, Index inputs) : states_(states), inputs_(inputs) {
  if (states < 1 || inputs < 1) {
    throw InputError("state-space dimensions must be positive");
  }
}

void StateSpacePattern::add_a(Index row, Index col) {
  if (row < 0 || row >= states_ || col < 0 || col >= states_) {
    throw InputError("A index out of range");
  }
  if (!a_.insert({row, col}).second) {
    throw InputError("duplicate A entry");
  }
}

void StateSpacePattern::add_b(Index row, Index input) {
  if (row < 0 || row >= states_ || input < 0 || input >= inputs_) {
    throw InputError("B index out of range");
  }
  if (!b_.insert({row, input}).second) {
    throw InputError("duplicate B entry");
  }
}

namespace {

using Kind = ParseError::Kind;

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Yields the non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t to_integer(const Line& line, const std::string& token) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(Kind::syntax, line.number, "expected an integer, got '" + token + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(Kind::syntax, line.number,
                     "'" + line.tokens.front() + "' takes " + std::to_string(arity - 1) + " arguments");
  }
}

// 1-based token -> 0-based index in [0, bound).
Index to_index(const Line& line, const std::string& token, Index bound) {
  const std::int64_t value = to_integer(line, token);
  if (value < 1 || value > bound) {
    throw ParseError(Kind::out_of_range, line.number,
                     "index " + token + " outside 1.." + std::to_string(bound));
  }
  return static_cast<Index>(value - 1);
}

std::pair<Index, Index> parse_header(const std::vector<Line>& lines, std::string_view keyword) {
  if (lines.empty()) {
    throw ParseError(Kind::syntax, 1, "missing '" + std::string(keyword) + "' header");
  }
  const Line& head = lines.front();
  if (head.tokens.front() != keyword) {
    throw ParseError(Kind::syntax, head.number,
                     "expected '" + std::string(keyword) + "', got '" + head.tokens.front() + "'");
  }
  expect_arity(head, 3);
  const std::int64_t first = to_integer(head, head.tokens[1]);
  const std::int64_t second = to_integer(head, head.tokens[2]);
  constexpr std::int64_t limit = std::numeric_limits<Index>::max();
  if (first < 1 || second < 1 || first > limit || second > limit) {
    throw ParseError(Kind::out_of_range, head.number, "dimensions must be positive");
  }
  return {static_cast<Index>(first), static_cast<Index>(second)};
}

}  // namespace

PolyPattern parse_pattern(std::istream& in) {
  const auto lines = tokenize(in);
  const auto [rows, cols] = parse_header(lines, "pattern");
  PolyPattern p(rows, cols);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.front() != "entry") {
      throw ParseError(Kind::syntax, line.number, "unknown directive '" + line.tokens.front() + "'");
    }
    expect_arity(line, 4);
    const Index i = to_index(line, line.tokens[1], rows);
    const Index j = to_index(line, line.tokens[2], cols);
    const std::int64_t d = to_integer(line, line.tokens[3]);
    if (d < 0) {
      throw ParseError(Kind::negative_degree, line.number, "negative degree " + line.tokens[3]);
    }
    if (d > std::numeric_limits<Degree>::max()) {
      throw ParseError(Kind::out_of_range, line.number, "degree too large");
    }
    if (p.contains(i, j)) {
      throw ParseError(Kind::duplicate_entry, line.number,
                       "duplicate entry (" + line.tokens[1] + "," + line.tokens[2] + ")");
    }
    p.add_entry(i, j, static_cast<Degree>(d));
  }
  return p;
}

PolyPattern parse_pattern(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_pattern(in);
}

StateSpacePattern parse_statespace(std::istream& in) {
  const auto lines = tokenize(in);
  const auto [n, m] = parse_header(lines, "statespace");
  StateSpacePattern ss(n, m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& directive = line.tokens.front();
    if (directive != "a" && directive != "b") {
      throw ParseError(Kind::syntax, line.number, "unknown directive '" + directive + "'");
    }
    expect_arity(line, 3);
    const Index i = to_index(line, line.tokens[1], n);
    const bool is_a = directive == "a";
    const Index j = to_index(line, line.tokens[2], is_a ? n : m);
    const auto& existing = is_a ? ss.a_entries() : ss.b_entries();
    if (existing.count({i, j}) != 0) {
      throw ParseError(Kind::duplicate_entry, line.number,
                       "duplicate " + directive + " entry (" + line.tokens[1] + "," + line.tokens[2] + ")");
    }
    if (is_a) {
      ss.add_a(i, j);
    } else {
      ss.add_b(i, j);
    }
  }
  return ss;
}

StateSpacePattern parse_statespace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_statespace(in);
}

std::string emit_pattern(const PolyPattern& p) {
  std::ostringstream out;
  out << "pattern " << p.rows() << ' ' << p.cols() << '\n';
  for (const auto& [pos, degree] : p.entries()) {
    out << "entry " << pos.row + 1 << ' ' << pos.col + 1 << ' ' << degree << '\n';
  }
  return out.str();
}

std::string emit_statespace(const StateSpacePattern& ss) {
  std::ostringstream out;
  out << "statespace " << ss.states() << ' ' << ss.inputs() << '\n';
  for (const auto& pos : ss.a_entries()) out << "a " << pos.row + 1 << ' ' << pos.col + 1 << '\n';
  for (const auto& pos : ss.b_entries()) out << "b " << pos.row + 1 << ' ' << pos.col + 1 << '\n';
  return out.str();
}

PolyPattern duplicate_row(const PolyPattern& p, Index row) {
  if (row < 0 || row >= p.rows()) throw InputError("row out of range");
  PolyPattern out(p.rows() + 1, p.cols());
  for (const auto& [pos, degree] : p.entries()) {
    out.add_entry(pos.row, pos.col, degree);
    if (pos.row == row) out.add_entry(p.rows(), pos.col, degree);
  }
  return out;
}

}  // namespace structctl
