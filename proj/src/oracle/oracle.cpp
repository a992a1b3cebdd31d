#include "structctl/oracle/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "structctl/bigraph.hpp"
#include "structctl/errors.hpp"
#include "structctl/statespace.hpp"

namespace structctl::oracle {

std::string_view to_string(Mode mode) { return mode == Mode::generic ? "generic" : "statespace_strict"; }

Mode parse_mode(std::string_view text) {
  if (text == "generic") return Mode::generic;
  if (text == "statespace_strict") return Mode::statespace_strict;
  throw InputError("unknown oracle mode '" + std::string(text) + "'");
}

namespace {

class CoefficientSource {
 public:
  CoefficientSource(std::uint64_t seed, std::int64_t bound) : engine_(seed), draw_(1, 2 * bound) {
    if (bound < 1) throw InputError("coefficient bound must be >= 1");
  }

  // Uniform over [-bound, -1] U [1, bound].
  std::int64_t next() {
    const std::int64_t x = draw_(engine_);
    const std::int64_t bound = draw_.b() / 2;
    return x <= bound ? -x : x - bound;
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<std::int64_t> draw_;
};

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns false.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(std::span<const int>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

ExactMatrix instantiate(const PolyPattern& p, std::uint64_t seed, const InstantiationOptions& options) {
  CoefficientSource source(seed, options.coeff_bound);
  ExactMatrix m(p.rows(), p.cols());
  m.setConstant(ExactPoly());
  for (const auto& [pos, degree] : p.entries()) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (Degree k = 0; k <= degree; ++k) coeffs.emplace_back(source.next());
    // Pinned entries still consume their draws so the remaining entries match
    // the generic instantiation of the same seed.
    if (options.mode == Mode::statespace_strict && options.monomial_entries.count(pos) != 0) {
      m(pos.row, pos.col) = ExactPoly::monomial(1, degree);
    } else {
      m(pos.row, pos.col) = ExactPoly(std::move(coeffs));
    }
  }
  return m;
}

ExactPoly minor_determinant(const ExactMatrix& m, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw InputError("minor needs as many rows as columns");
  const auto in_range = [](std::span<const int> idx, Eigen::Index bound) {
    return std::all_of(idx.begin(), idx.end(), [bound](int i) { return i >= 0 && i < bound; });
  };
  if (!in_range(rows, m.rows()) || !in_range(cols, m.cols())) throw InputError("minor index out of range");
  return cofactor_determinant(select(m, rows, cols));
}

ZeroSetReport zero_set_report(const PolyPattern& p, std::span<const std::uint64_t> seeds,
                              const OracleOptions& options) {
  if (std::min(p.rows(), p.cols()) > options.max_min_dimension) {
    throw GuardError("oracle limited to min(rows, cols) <= " + std::to_string(options.max_min_dimension));
  }
  ZeroSetReport report;
  report.term_rank = term_rank(build_graph(p));
  if (report.term_rank == 0) throw InputError("term rank is zero: the pattern has no nonzero entries");
  const int r1 = static_cast<int>(report.term_rank);

  for (std::uint64_t seed : seeds) {
    const ExactMatrix m = instantiate(p, seed, options.instantiation);
    std::optional<ExactPoly> g;
    for_each_subset(p.rows(), r1, [&](std::span<const int> rows) {
      return for_each_subset(p.cols(), r1, [&](std::span<const int> cols) {
        ExactPoly det = minor_determinant(m, rows, cols);
        if (det.is_zero()) return true;
        g = g ? poly_gcd(*g, det) : det.primitive_part();
        // A constant gcd stays constant.
        return !g->is_constant();
      });
    });
    SeedOutcome outcome{seed, std::nullopt};
    if (g) outcome.gcd_degree = g->degree();
    report.seeds.push_back(outcome);
    if (outcome.gcd_degree == 0) {
      report.zero_set_empty = true;
      if (options.stop_at_witness) break;
    }
  }
  return report;
}

bool oracle_zero_set_empty(const PolyPattern& p, std::span<const std::uint64_t> seeds, const OracleOptions& options) {
  OracleOptions quick = options;
  quick.stop_at_witness = true;
  return zero_set_report(p, seeds, quick).zero_set_empty;
}

std::set<Position> pure_monomial_entries(const StateSpacePattern& ss) {
  std::set<Position> out;
  for (Index i = 0; i < ss.states(); ++i) {
    if (ss.a_entries().count({i, i}) == 0) out.insert({i, i});
  }
  return out;
}

bool oracle_zero_set_empty(const StateSpacePattern& ss, std::span<const std::uint64_t> seeds, Mode mode,
                           std::int64_t coeff_bound) {
  OracleOptions options;
  options.instantiation.mode = mode;
  options.instantiation.coeff_bound = coeff_bound;
  options.instantiation.monomial_entries = pure_monomial_entries(ss);
  return oracle_zero_set_empty(build_pencil_pattern(ss), seeds, options);
}

bool kalman_rank_oracle(const StateSpacePattern& ss, std::span<const std::uint64_t> seeds, std::int64_t coeff_bound) {
  const Index n = ss.states();
  if (n > 12) throw GuardError("Kalman rank oracle limited to n <= 12");
  const Index m = ss.inputs();
  for (std::uint64_t seed : seeds) {
    CoefficientSource source(seed, coeff_bound);
    IntegerMatrix a = IntegerMatrix::Zero(n, n);
    IntegerMatrix b = IntegerMatrix::Zero(n, m);
    for (const Position& pos : ss.a_entries()) a(pos.row, pos.col) = source.next();
    for (const Position& pos : ss.b_entries()) b(pos.row, pos.col) = source.next();

    IntegerMatrix controllability(n, static_cast<Eigen::Index>(n) * m);
    IntegerMatrix block = b;
    for (Index k = 0; k < n; ++k) {
      controllability.middleCols(static_cast<Eigen::Index>(k) * m, m) = block;
      if (k + 1 < n) block = multiply(a, block);
    }
    if (exact_rank(controllability) == n) return true;
  }
  return false;
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = first + k;
  return out;
}

}  // namespace structctl::oracle
