#include "cmirred/diophantine.hpp"

#include "cmirred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace cmirred {

namespace {

using Wide = __int128;

// Floor square root of a nonnegative value, or -1 if it is not a perfect square.
Wide exact_sqrt(Wide n) {
  if (n < 0) return -1;
  Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : -1;
}

void search_row(std::int64_t w, std::int64_t bound, std::vector<SolutionTuple>& out) {
  for (std::int64_t x = w; x <= bound; ++x) {
    for (std::int64_t y = x; y <= bound; ++y) {
      const Wide w2 = Wide(w) * w, x2 = Wide(x) * x, y2 = Wide(y) * y;
      const Wide c = w2 + x2 + y2;
      const Wide d = w2 * w2 + x2 * x2 + y2 * y2;
      const Wide r = exact_sqrt(3 * c * c - 6 * d);
      if (r < 0) continue;
      for (Wide twice_s : {c - r, c + r}) {
        if (twice_s < 0 || twice_s % 2 != 0) continue;
        const Wide z = exact_sqrt(twice_s / 2);
        if (z < y || z > bound) continue;
        const auto zz = static_cast<std::int64_t>(z);
        if (w == 0 && x == 0 && y == 0 && zz == 0) continue;
        if (!is_solution(w, x, y, zz)) continue;
        const std::int64_t g = std::gcd(std::gcd(w, x), std::gcd(y, zz));
        out.push_back({{w, x, y, zz}, g == 1});
      }
    }
  }
}

}  // namespace

bool is_solution(std::int64_t w, std::int64_t x, std::int64_t y, std::int64_t z) {
  const Wide w2 = Wide(w) * w, x2 = Wide(x) * x, y2 = Wide(y) * y, z2 = Wide(z) * z;
  const Wide s = w2 + x2 + y2 + z2;
  return s * s == 3 * (w2 * w2 + x2 * x2 + y2 * y2 + z2 * z2);
}

std::vector<SolutionTuple> enumerate_solutions(std::int64_t bound, unsigned jobs) {
  if (bound < 1 || bound > 100000) throw PreconditionError("bound must lie in [1, 100000]");
  jobs = std::max(1U, jobs);
  std::vector<std::vector<SolutionTuple>> parts(jobs);
  // Outer values are dealt round-robin so the workers see similar loads.
  const auto worker = [&](unsigned id) {
    for (std::int64_t w = id; w <= bound; w += jobs) search_row(w, bound, parts[id]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  std::vector<SolutionTuple> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cmirred
