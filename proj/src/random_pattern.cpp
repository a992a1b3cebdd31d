#include "structctl/random_pattern.hpp"

#include <algorithm>
#include <random>
#include <ranges>
#include <vector>

#include "structctl/errors.hpp"

namespace structctl {

PolyPattern gen_random_pattern(Index rows, Index cols, std::size_t edges, Degree max_degree, std::uint64_t seed) {
  if (max_degree < 0) throw InputError("max degree must be non-negative");
  const auto cells = static_cast<std::int64_t>(rows) * cols;
  PolyPattern p(rows, cols);
  if (static_cast<std::int64_t>(edges) > cells) throw InputError("more edges requested than matrix cells");

  std::mt19937_64 engine(seed);
  // iota iterators are not forward iterators in the legacy sense, so the
  // sample goes into a random-access range (reservoir sampling).
  std::vector<std::int64_t> picked(edges);
  std::ranges::sample(std::views::iota(std::int64_t{0}, cells), picked.begin(), static_cast<std::ptrdiff_t>(edges),
                      engine);
  std::uniform_int_distribution<Degree> degree(0, max_degree);
  for (std::int64_t cell : picked) {
    p.add_entry(static_cast<Index>(cell / cols), static_cast<Index>(cell % cols), degree(engine));
  }
  return p;
}

}  // namespace structctl
