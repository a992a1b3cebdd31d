#pragma once

#include <cstddef>
#include <cstdint>

#include "structctl/pattern.hpp"

namespace structctl {

/// Uniformly random pattern with exactly `edges` distinct entries and
/// degrees uniform in [0, max_degree]. Deterministic for a fixed seed.
/// Throws InputError if `edges` exceeds rows * cols.
PolyPattern gen_random_pattern(Index rows, Index cols, std::size_t edges, Degree max_degree, std::uint64_t seed);

}  // namespace structctl
