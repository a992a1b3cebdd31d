#include "structctl/bigraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "structctl/errors.hpp"

namespace structctl {

WeightedBigraph::WeightedBigraph(Index rows, Index cols, std::vector<Edge> edges)
    : rows_(rows), cols_(cols), edges_(std::move(edges)) {
  if (rows < 0 || cols < 0) throw InputError("negative vertex count");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.position() < b.position(); });
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw InputError("edge endpoint out of range");
    }
    if (e.weight < 0) throw InputError("negative edge weight");
    if (k > 0 && edges_[k - 1].position() == e.position()) {
      throw InputError("duplicate edge (" + std::to_string(e.row + 1) + "," + std::to_string(e.col + 1) + ")");
    }
  }

  row_start_.assign(static_cast<std::size_t>(rows) + 1, 0);
  col_start_.assign(static_cast<std::size_t>(cols) + 1, 0);
  for (const Edge& e : edges_) {
    ++row_start_[e.row + 1];
    ++col_start_[e.col + 1];
  }
  for (Index r = 0; r < rows; ++r) row_start_[r + 1] += row_start_[r];
  for (Index c = 0; c < cols; ++c) col_start_[c + 1] += col_start_[c];

  // Edges are sorted by (row, col), so a single pass fills both incidence
  // arrays with ascending opposite endpoints.
  row_ids_.resize(edges_.size());
  col_ids_.resize(edges_.size());
  std::vector<std::size_t> row_fill(row_start_.begin(), row_start_.end() - 1);
  std::vector<std::size_t> col_fill(col_start_.begin(), col_start_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    row_ids_[row_fill[edges_[id].row]++] = id;
    col_ids_[col_fill[edges_[id].col]++] = id;
  }
}

std::span<const WeightedBigraph::EdgeId> WeightedBigraph::row_edges(Index row) const {
  return std::span<const EdgeId>(row_ids_).subspan(row_start_[row], row_start_[row + 1] - row_start_[row]);
}

std::span<const WeightedBigraph::EdgeId> WeightedBigraph::col_edges(Index col) const {
  return std::span<const EdgeId>(col_ids_).subspan(col_start_[col], col_start_[col + 1] - col_start_[col]);
}

std::optional<WeightedBigraph::EdgeId> WeightedBigraph::find_edge(Index row, Index col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) return std::nullopt;
  const auto ids = row_edges(row);
  auto it = std::lower_bound(ids.begin(), ids.end(), col,
                             [this](EdgeId id, Index c) { return edges_[id].col < c; });
  if (it == ids.end() || edges_[*it].col != col) return std::nullopt;
  return *it;
}

WeightedBigraph WeightedBigraph::subgraph(std::span<const unsigned char> keep) const {
  std::vector<Edge> kept;
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    if (keep[id]) kept.push_back(edges_[id]);
  }
  return WeightedBigraph(rows_, cols_, std::move(kept));
}

bool Matching::contains(Index row, Index col) const {
  return std::find(pairs.begin(), pairs.end(), Position{row, col}) != pairs.end();
}

bool Matching::is_valid() const {
  std::vector<Index> rows, cols;
  for (const auto& p : pairs) {
    rows.push_back(p.row);
    cols.push_back(p.col);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end() &&
         std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

WeightedBigraph build_graph(const PolyPattern& p) {
  std::vector<Edge> edges;
  edges.reserve(p.entry_count());
  for (const auto& [pos, degree] : p.entries()) edges.push_back({pos.row, pos.col, degree});
  return WeightedBigraph(p.rows(), p.cols(), std::move(edges));
}

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const WeightedBigraph& g, const MatchingFilter& filter)
      : g_(g),
        filter_(filter),
        match_row_(static_cast<std::size_t>(g.rows()), kFree),
        match_col_(static_cast<std::size_t>(g.cols()), kFree),
        dist_(static_cast<std::size_t>(g.rows())),
        cursor_(static_cast<std::size_t>(g.rows())) {}

  Matching run() {
    while (layer()) {
      for (Index r = 0; r < g_.rows(); ++r) cursor_[r] = 0;
      for (Index r = 0; r < g_.rows(); ++r) {
        if (row_usable(r) && match_row_[r] == kFree) augment(r);
      }
    }
    Matching m;
    for (Index r = 0; r < g_.rows(); ++r) {
      if (match_row_[r] != kFree) m.pairs.push_back({r, match_row_[r]});
    }
    return m;
  }

 private:
  static constexpr Index kFree = -1;
  static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

  bool row_usable(Index r) const { return !filter_.skip_row || *filter_.skip_row != r; }

  // Column reached through this edge, or kFree if the edge is filtered out.
  Index usable_col(WeightedBigraph::EdgeId id) const {
    if (!filter_.edge_alive.empty() && !filter_.edge_alive[id]) return kFree;
    const Index c = g_.edge(id).col;
    if (filter_.skip_col && *filter_.skip_col == c) return kFree;
    return c;
  }

  // BFS from all free rows; true if some free column is reachable.
  bool layer() {
    std::vector<Index> queue;
    for (Index r = 0; r < g_.rows(); ++r) {
      if (row_usable(r) && match_row_[r] == kFree) {
        dist_[r] = 0;
        queue.push_back(r);
      } else {
        dist_[r] = kUnreached;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Index r = queue[head];
      for (auto id : g_.row_edges(r)) {
        const Index c = usable_col(id);
        if (c == kFree) continue;
        const Index next = match_col_[c];
        if (next == kFree) {
          found = true;
        } else if (dist_[next] == kUnreached) {
          dist_[next] = dist_[r] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool augment(Index r) {
    const auto ids = g_.row_edges(r);
    for (auto& k = cursor_[r]; k < ids.size(); ++k) {
      const Index c = usable_col(ids[k]);
      if (c == kFree) continue;
      const Index next = match_col_[c];
      if (next == kFree || (dist_[next] == dist_[r] + 1 && augment(next))) {
        match_row_[r] = c;
        match_col_[c] = r;
        ++k;
        return true;
      }
    }
    dist_[r] = kUnreached;
    return false;
  }

  const WeightedBigraph& g_;
  const MatchingFilter& filter_;
  std::vector<Index> match_row_;
  std::vector<Index> match_col_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
};

void enumerate_from(const WeightedBigraph& g, Index row, std::size_t wanted, std::vector<bool>& col_used,
                    Matching& current, std::vector<Matching>& out) {
  if (current.size() == wanted) {
    out.push_back(current);
    return;
  }
  const auto rows_left = static_cast<std::size_t>(g.rows() - row);
  if (rows_left < wanted - current.size()) return;
  // Using row `row` sorts before skipping it, and smaller columns first.
  for (auto id : g.row_edges(row)) {
    const Index c = g.edge(id).col;
    if (col_used[c]) continue;
    col_used[c] = true;
    current.pairs.push_back({row, c});
    enumerate_from(g, row + 1, wanted, col_used, current, out);
    current.pairs.pop_back();
    col_used[c] = false;
  }
  enumerate_from(g, row + 1, wanted, col_used, current, out);
}

}  // namespace

Matching max_matching(const WeightedBigraph& g) { return max_matching(g, MatchingFilter{}); }

Matching max_matching(const WeightedBigraph& g, const MatchingFilter& filter) {
  return HopcroftKarp(g, filter).run();
}

std::size_t term_rank(const WeightedBigraph& g) { return max_matching(g).size(); }

std::vector<Matching> enumerate_saturating_matchings(const WeightedBigraph& g, std::size_t size,
                                                     Index max_rows) {
  if (g.rows() > max_rows) {
    throw GuardError("matching enumeration limited to " + std::to_string(max_rows) + " rows");
  }
  std::vector<Matching> out;
  std::vector<bool> col_used(static_cast<std::size_t>(g.cols()), false);
  Matching current;
  enumerate_from(g, 0, size, col_used, current, out);
  return out;
}

}  // namespace structctl
