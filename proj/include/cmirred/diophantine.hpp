#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cmirred {

/// A nonnegative solution of (w^2+x^2+y^2+z^2)^2 = 3(w^4+x^4+y^4+z^4),
/// sorted ascending.
struct SolutionTuple {
  std::array<std::int64_t, 4> values{};
  bool primitive = false;

  auto operator<=>(const SolutionTuple&) const = default;
};

bool is_solution(std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z);

/// All sorted solutions with entries in [0, bound], excluding (0,0,0,0), in
/// ascending lexicographic order. The result does not depend on `jobs`.
/// Requires 1 <= bound <= 100000.
std::vector<SolutionTuple> enumerate_solutions(std::int64_t bound, unsigned jobs = 1);

}  // namespace cmirred
