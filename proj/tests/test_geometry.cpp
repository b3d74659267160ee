#include "doctest.h"

#include "cmirred/errors.hpp"
#include "cmirred/family.hpp"
#include "cmirred/geometry.hpp"

#include <algorithm>
#include <cmath>

using namespace cmirred;

namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Rank of the edge vectors v_i - v_0 by Gaussian elimination with pivoting.
std::size_t affine_rank(const RegularSimplex& s) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < s.vertices.size(); ++i) {
    std::vector<double> r(s.vertices[i].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = s.vertices[i][k] - s.vertices[0][k];
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < rows.front().size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r][c]) > std::abs(rows[piv][c])) piv = r;
    if (std::abs(rows[piv][c]) < 1e-12) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const double f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("regular simplex construction") {
  for (unsigned n : {2U, 3U, 5U}) {
    for (double a : {1.0, 2.0, 0.3}) {
      const RegularSimplex s = regular_simplex(n, a);
      REQUIRE(s.vertices.size() == n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) CHECK(std::abs(distance(s.vertices[i], s.vertices[j]) - a) <= 1e-12 * a);
      CHECK(affine_rank(s) == n);
      // Coordinates sum to a constant on the hyperplane.
      for (const auto& v : s.vertices) {
        double total = 0;
        for (double x : v) total += x;
        CHECK(total == doctest::Approx(a / std::sqrt(2.0)).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(regular_simplex(1, 1.0), PreconditionError);
  CHECK_THROWS_AS(regular_simplex(3, 0.0), PreconditionError);
  CHECK_THROWS_AS(regular_simplex(3, -1.0), PreconditionError);
}

TEST_CASE("relation residual") {
  const RegularSimplex s = regular_simplex(3, 2.0);
  const std::vector<double> at_vertex{1, 0, 0, 0};
  const auto t = relation_residual(s, at_vertex);
  CHECK(t.d[0] == doctest::Approx(0.0));
  CHECK(t.d[1] == doctest::Approx(2.0));
  CHECK(std::abs(t.residual) < 1e-12);

  const RegularSimplex tri = regular_simplex(2, 8.0);
  const std::vector<double> centroid{1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(std::abs(relation_residual(tri, centroid).residual) < 1e-9);

  const std::vector<double> bad{0.5, 0.6, 0.0};
  CHECK_THROWS_AS(relation_residual(tri, bad), PreconditionError);
  CHECK_THROWS_AS(relation_residual(tri, std::vector<double>{1.0, 0.0}), PreconditionError);
}

TEST_CASE("relation holds on the whole affine hull") {
  std::mt19937_64 rng(1234);
  for (unsigned n = 2; n <= 5; ++n) {
    const RegularSimplex s = regular_simplex(n, 1.7);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto w = sample_affine_weights(n, rng);
      double total = 0;
      for (double x : w) total += x;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      const auto t = relation_residual(s, w);
      worst = std::max(worst, std::abs(t.residual));
      // Relabeling vertices permutes the distances and leaves the residual unchanged.
      auto d = t.d;
      std::reverse(d.begin(), d.end());
      CHECK(std::abs(normalized_relation(s.a, d) - t.residual) < 1e-12);
    }
    CHECK(worst < 1e-9);
  }
  // A point off the hyperplane violates the relation.
  const RegularSimplex tri = regular_simplex(2, 1.0);
  const std::vector<double> off{0.0, 0.0, 0.0};
  std::vector<double> d;
  for (const auto& v : tri.vertices) d.push_back(distance(off, v));
  CHECK(std::abs(normalized_relation(1.0, d)) > 1e-3);
}

TEST_CASE("residual is scale invariant") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 50; ++i) {
    const auto w = sample_affine_weights(3, rng);
    const auto base = relation_residual(regular_simplex(3, 1.0), w);
    for (double lambda : {0.01, 1.0, 100.0}) {
      std::vector<double> d;
      for (double x : base.d) d.push_back(lambda * x);
      CHECK(std::abs(normalized_relation(lambda, d) - base.residual) < 1e-12);
    }
  }
}

TEST_CASE("relation matches the t = 3 family member") {
  // For n = 2 the side and three distances satisfy f(a, d1, d2, d3) = 0 with m = 4, t = 3.
  const FieldSpec Q = FieldSpec::rational();
  const Polynomial f = build_f(Q, 4, FieldElement::from_integer(Q, 3));
  std::mt19937_64 rng(8);
  const RegularSimplex tri = regular_simplex(2, 1.3);
  for (int i = 0; i < 100; ++i) {
    const auto t = relation_residual(tri, sample_affine_weights(2, rng));
    // Evaluate f numerically through its terms.
    const std::vector<double> v{tri.a, t.d[0], t.d[1], t.d[2]};
    double value = 0, scale = 0;
    for (const auto& [m, c] : f.terms()) {
      double term = c.rational().get_d();
      for (std::size_t k = 0; k < 4; ++k) term *= std::pow(v[k], m[k]);
      value += term;
    }
    for (double x : v) scale += x * x;
    CHECK(std::abs(value) / (scale * scale) < 1e-9);
  }
}

TEST_CASE("fourth distance") {
  const std::vector<double> k345{3, 4, 5};
  const auto r345 = solve_fourth_distance(k345);
  REQUIRE(r345.size() == 2);
  CHECK(std::abs(r345[1] - std::sqrt(25 + 12 * std::sqrt(3.0))) < 1e-9);
  CHECK(std::abs(r345[1] - 6.766432567) < 1e-9);
  CHECK(std::abs(r345[0] - std::sqrt(25 - 12 * std::sqrt(3.0))) < 1e-9);

  const std::vector<double> k578{5, 7, 8};
  const auto r578 = solve_fourth_distance(k578, Role::SideGiven);
  REQUIRE_FALSE(r578.empty());
  CHECK(std::abs(r578[0] - 3.0) < 1e-9);

  const std::vector<double> k80{80, 100, 150};
  const auto r80 = solve_fourth_distance(k80);
  CHECK(r80.size() == 2);
  for (double z : r80) {
    const std::vector<double> rest{100, 150, z};
    CHECK(std::abs(normalized_relation(80, rest)) < 1e-9);
    // Independent quadratic-formula oracle in s = z^2.
    const double C = 80.0 * 80 + 100.0 * 100 + 150.0 * 150;
    const double D = std::pow(80.0, 4) + std::pow(100.0, 4) + std::pow(150.0, 4);
    const double s = z * z;
    CHECK(std::abs(-2 * s * s + 2 * C * s + (C * C - 3 * D)) / (C * C) < 1e-9);
  }

  // No real solution: one value much larger than the others.
  const std::vector<double> far{1, 1, 10};
  CHECK(solve_fourth_distance(far).empty());
  CHECK_THROWS_AS(solve_fourth_distance(std::vector<double>{1, 2}), PreconditionError);
  CHECK_THROWS_AS(solve_fourth_distance(std::vector<double>{1, -2, 3}), PreconditionError);
}
