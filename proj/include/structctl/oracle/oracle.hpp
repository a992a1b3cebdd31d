#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "structctl/oracle/matrix.hpp"
#include "structctl/oracle/poly.hpp"
#include "structctl/pattern.hpp"

namespace structctl::oracle {

// Exact ground truth for the structural verdicts. A pattern is instantiated
// with random nonzero integer coefficients; a random point avoids any fixed
// proper algebraic variety with overwhelming probability, so a single
// instantiation with coprime maximal minors certifies the generic case.

enum class Mode {
  /// Every coefficient of every entry is free.
  generic,
  /// Designated entries are pinned to the exact monomial s^d, as the
  /// diagonal of sI - A is when A_ii = 0.
  statespace_strict,
};

std::string_view to_string(Mode mode);
/// "generic" or "statespace_strict"; throws InputError otherwise.
Mode parse_mode(std::string_view text);

struct InstantiationOptions {
  Mode mode = Mode::generic;
  /// Coefficients are drawn uniformly from [-bound, -1] U [1, bound].
  std::int64_t coeff_bound = 99;
  /// Entries forced to monic monomials in statespace_strict mode.
  std::set<Position> monomial_entries;
};

/// Deterministic for a fixed seed. Absent entries become zero; a degree-d
/// entry gets d + 1 nonzero coefficients.
ExactMatrix instantiate(const PolyPattern& p, std::uint64_t seed, const InstantiationOptions& options = {});

/// Determinant of the square submatrix on the given rows and columns
/// (0-based), by memoized cofactor expansion.
ExactPoly minor_determinant(const ExactMatrix& m, std::span<const int> rows, std::span<const int> cols);

struct SeedOutcome {
  std::uint64_t seed = 0;
  /// Degree of the gcd of all r1 x r1 minors; empty if every minor vanished.
  std::optional<int> gcd_degree;
};

struct ZeroSetReport {
  std::size_t term_rank = 0;
  std::vector<SeedOutcome> seeds;
  /// True iff some seed produced a constant gcd.
  bool zero_set_empty = false;
};

struct OracleOptions {
  InstantiationOptions instantiation;
  /// Largest allowed min(rows, cols); the minor enumeration is combinatorial.
  int max_min_dimension = 6;
  /// Stop at the first seed that certifies an empty zero set.
  bool stop_at_witness = false;
};

/// For each seed, the gcd of every term_rank x term_rank minor of an
/// instantiation. Throws InputError on zero term rank and GuardError above
/// the size guard.
ZeroSetReport zero_set_report(const PolyPattern& p, std::span<const std::uint64_t> seeds,
                              const OracleOptions& options = {});

bool oracle_zero_set_empty(const PolyPattern& p, std::span<const std::uint64_t> seeds,
                           const OracleOptions& options = {});

/// Positions of [sI - A, B] that are exactly s: diagonal entries with A_ii = 0.
std::set<Position> pure_monomial_entries(const StateSpacePattern& ss);

/// State-space convenience: builds [sI - A, B] and, in statespace_strict mode,
/// pins its pure-s diagonal entries.
bool oracle_zero_set_empty(const StateSpacePattern& ss, std::span<const std::uint64_t> seeds, Mode mode,
                           std::int64_t coeff_bound = 99);

/// Classical check: rank [B, AB, ..., A^(n-1) B] = n for some seed, with A and
/// B filled by random nonzero integers on their patterns. Guarded at n <= 12.
bool kalman_rank_oracle(const StateSpacePattern& ss, std::span<const std::uint64_t> seeds,
                        std::int64_t coeff_bound = 99);

/// seeds first, first + 1, ..., first + count - 1
std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count);

}  // namespace structctl::oracle
