#pragma once

// Numeric checks of the distance relation on regular simplices and the
// fourth-distance solver for the equilateral triangle.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cmirred {

struct RegularSimplex {
  unsigned n = 0;
  double a = 0;
  std::vector<std::vector<double>> vertices;  ///< n+1 points in R^(n+1)
};

/// Vertices (a/sqrt 2) e_i. Requires n >= 2 and a > 0.
RegularSimplex regular_simplex(unsigned n, double a);

struct DistanceTuple {
  double a = 0;
  std::vector<double> d;
  /// ((a^2 + sum d^2)^2 - (n+1)(a^4 + sum d^4)) / (a^2 + sum d^2)^2
  double residual = 0;
};

/// Point given by affine weights over the vertices; the weights must sum to 1.
DistanceTuple relation_residual(const RegularSimplex& s, std::span<const double> weights);

/// Residual of the relation for an explicit side and distances.
double normalized_relation(double a, std::span<const double> d);

/// Weights uniform on [-2, 3], then shifted so they sum to 1.
std::vector<double> sample_affine_weights(unsigned n, std::mt19937_64& rng);

enum class Role { SideGiven, SideUnknown };

/// Nonnegative solutions of (w^2+x^2+y^2+z^2)^2 = 3(w^4+x^4+y^4+z^4) for the
/// missing value, ascending. The relation is symmetric, so the role only
/// labels which value is missing.
std::vector<double> solve_fourth_distance(std::span<const double> known, Role role = Role::SideUnknown);

}  // namespace cmirred
