#include "cmirred/geometry.hpp"

#include "cmirred/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cmirred {

RegularSimplex regular_simplex(unsigned n, double a) {
  if (n < 2) throw PreconditionError("simplex dimension must be at least 2");
  if (!(a > 0) || !std::isfinite(a)) throw PreconditionError("edge length must be positive and finite");
  RegularSimplex s{n, a, {}};
  const double scale = a / std::sqrt(2.0);
  for (unsigned i = 0; i <= n; ++i) {
    std::vector<double> v(n + 1, 0.0);
    v[i] = scale;
    s.vertices.push_back(std::move(v));
  }
  return s;
}

double normalized_relation(double a, std::span<const double> d) {
  const double a2 = a * a;
  double squares = a2, fourths = a2 * a2;
  for (double x : d) {
    squares += x * x;
    fourths += x * x * x * x;
  }
  const double scale = squares * squares;
  const double k = static_cast<double>(d.size());
  const double raw = squares * squares - k * fourths;
  return scale == 0 ? raw : raw / scale;
}

DistanceTuple relation_residual(const RegularSimplex& s, std::span<const double> weights) {
  if (weights.size() != s.vertices.size()) throw PreconditionError("one weight per vertex is required");
  double total = 0;
  for (double w : weights) total += w;
  if (std::abs(total - 1.0) > 1e-9) throw PreconditionError("affine weights must sum to 1");

  const std::size_t dim = s.vertices.front().size();
  std::vector<double> point(dim, 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) point[k] += weights[i] * s.vertices[i][k];
  }
  DistanceTuple out{s.a, {}, 0};
  for (const auto& v : s.vertices) {
    double sq = 0;
    for (std::size_t k = 0; k < dim; ++k) sq += (point[k] - v[k]) * (point[k] - v[k]);
    out.d.push_back(std::sqrt(sq));
  }
  out.residual = normalized_relation(s.a, out.d);
  return out;
}

std::vector<double> sample_affine_weights(unsigned n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 3.0);
  std::vector<double> w(n + 1);
  double total = 0;
  for (auto& x : w) {
    x = dist(rng);
    total += x;
  }
  const double shift = (1.0 - total) / static_cast<double>(n + 1);
  for (auto& x : w) x += shift;
  return w;
}

std::vector<double> solve_fourth_distance(std::span<const double> known, Role) {
  if (known.size() != 3) throw PreconditionError("exactly three known values are required");
  double c = 0, d = 0;
  for (double x : known) {
    if (!(x >= 0) || !std::isfinite(x)) throw PreconditionError("known values must be nonnegative");
    c += x * x;
    d += x * x * x * x;
  }
  // -2 s^2 + 2 C s + (C^2 - 3 D) = 0 for s = (missing value)^2.
  const double disc = 3 * c * c - 6 * d;
  const double tol = 1e-12 * std::max(1.0, c * c);
  if (disc < -tol) return {};
  const double root = disc > 0 ? std::sqrt(disc) : 0.0;
  std::vector<double> out;
  for (double s : {(c - root) / 2, (c + root) / 2}) {
    if (s < -tol) continue;
    out.push_back(std::sqrt(std::max(0.0, s)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cmirred
