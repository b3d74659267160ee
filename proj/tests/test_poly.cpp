#include "doctest.h"
#include "support.hpp"

#include "cmirred/errors.hpp"
#include "cmirred/family.hpp"
#include "cmirred/poly_text.hpp"

#include <algorithm>
#include <numeric>

using namespace cmirred;
using testing_support::random_element;
using testing_support::random_nonzero_polynomial;
using testing_support::random_polynomial;

namespace {

RingPtr xyz(const FieldSpec& field = FieldSpec::rational()) {
  return make_ring(field, VariableNames({"x", "y", "z"}));
}

Polynomial P(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

std::vector<FieldElement> random_point(const RingPtr& ring, std::mt19937_64& rng) {
  std::vector<FieldElement> pt;
  for (std::size_t i = 0; i < ring->arity(); ++i) pt.push_back(random_element(ring->field, rng));
  return pt;
}

}  // namespace

TEST_CASE("ring operations") {
  const RingPtr r = xyz();
  const Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1), z = Polynomial::variable(r, 2);
  CHECK((x + y) * (x - y) == x.pow(2) - y.pow(2));
  CHECK((x - x).is_zero());
  CHECK((x - x).size() == 0);
  CHECK_FALSE((x - x).total_degree().has_value());

  const Polynomial heron = (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z);
  const Polynomial sq = x.pow(2) + y.pow(2) + z.pow(2);
  const Polynomial fourths = x.pow(4) + y.pow(4) + z.pow(4);
  CHECK(heron == sq.pow(2) - FieldElement::from_integer(r->field, 2) * fourths);

  const RingPtr rw = xyz(FieldSpec::cyclotomic());
  const Polynomial X = Polynomial::variable(rw, 0), Y = Polynomial::variable(rw, 1), Z = Polynomial::variable(rw, 2);
  const FieldElement w = FieldElement::omega();
  const FieldElement w2 = w * w;
  const Polynomial lhs = FieldElement::from_integer(rw->field, -2) * (X.pow(2) + w * Y.pow(2) + w2 * Z.pow(2)) *
                         (X.pow(2) + w2 * Y.pow(2) + w * Z.pow(2));
  const Polynomial sqw = X.pow(2) + Y.pow(2) + Z.pow(2);
  CHECK(lhs == sqw.pow(2) - FieldElement::from_integer(rw->field, 3) * (X.pow(4) + Y.pow(4) + Z.pow(4)));

  const RingPtr other = make_ring(FieldSpec::rational(), VariableNames({"a", "b", "c"}));
  CHECK_THROWS_AS(x + Polynomial::variable(other, 0), RingMismatch);
  CHECK_THROWS_AS(Polynomial::variable(r, 0) + Polynomial::variable(xyz(FieldSpec::prime(5)), 0), RingMismatch);
}

TEST_CASE("leading term is the grlex maximum") {
  const RingPtr r = xyz();
  const Polynomial p = P("z^3 + x*y + x^2*z + y^3", r);
  CHECK(p.leading_term().first == Monomial({2, 0, 1}));
  CHECK(P("y + x", r).leading_term().first == Monomial({1, 0, 0}));
  CHECK_THROWS(Polynomial(r).leading_term());
}

TEST_CASE("leading homogeneous component") {
  const RingPtr r = xyz();
  CHECK(leading_homogeneous_component(P("x^2 + 3*x + 1", r)) == P("x^2", r));
  CHECK_THROWS_AS(leading_homogeneous_component(Polynomial(r)), PreconditionError);

  const FieldSpec Q = FieldSpec::rational();
  const FieldElement t = FieldElement::parse(Q, "5/3");
  const Polynomial g = build_g({Q, 3, FieldElement::from_integer(Q, 2), t});
  CHECK(leading_homogeneous_component(g) == build_f(Q, 3, t));

  std::mt19937_64 rng(3);
  const RingPtr r5 = xyz(FieldSpec::prime(5));
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = random_nonzero_polynomial(r5, rng, 5, 4);
    const Polynomial b = random_nonzero_polynomial(r5, rng, 5, 4);
    const Polynomial ab = a * b;
    REQUIRE_FALSE(ab.is_zero());
    CHECK(leading_homogeneous_component(ab) ==
          leading_homogeneous_component(a) * leading_homogeneous_component(b));
    CHECK(*leading_homogeneous_component(a).total_degree() == *a.total_degree());
  }
}

TEST_CASE("homogeneity") {
  const RingPtr r = xyz();
  const auto h = is_homogeneous(P("x^2*y + y^3", r));
  CHECK(h.homogeneous);
  CHECK(h.degree == 3U);
  CHECK_FALSE(is_homogeneous(P("x^2 + x", r)).homogeneous);
  const auto zero = is_homogeneous(Polynomial(r));
  CHECK(zero.homogeneous);
  CHECK_FALSE(zero.degree.has_value());
}

TEST_CASE("substitution") {
  const RingPtr r = xyz();
  CHECK(substitute(P("x + y", r), {{0, Polynomial(r)}}) == P("y", r));

  // f in four variables with the last one set to 1 is the a = 1 member of g.
  const FieldSpec Q = FieldSpec::rational();
  const FieldElement t = FieldElement::from_integer(Q, 3);
  const Polynomial f4 = build_f(Q, 4, t);
  const Polynomial g = build_g({Q, 3, FieldElement::one(Q), t});
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(Polynomial::variable(g.ring_ptr(), i));
  images.push_back(Polynomial::constant(g.ring_ptr(), 1));
  CHECK(substitute(f4, g.ring_ptr(), images) == g);

  // Evaluation oracle: substitution commutes with evaluation.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(r, rng, 5, 3);
    const Polynomial a = random_polynomial(r, rng, 3, 2);
    const auto pt = random_point(r, rng);
    auto inner = pt;
    inner[1] = a.evaluate(pt);
    CHECK(substitute(p, {{1, a}}).evaluate(pt) == p.evaluate(inner));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(21);
  for (const FieldSpec& field : testing_support::test_fields()) {
    CAPTURE(field.name());
    const RingPtr r = xyz(field);
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = random_polynomial(r, rng), b = random_polynomial(r, rng), c = random_polynomial(r, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      const auto pt = random_point(r, rng);
      CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
  }
}

TEST_CASE("permutations") {
  const RingPtr r = xyz();
  const std::vector<std::size_t> swap_yz{0, 2, 1};
  CHECK(permute_variables(P("y^2 - z^2", r), swap_yz) == P("z^2 - y^2", r));

  const Polynomial f = build_f(FieldSpec::rational(), 3, FieldElement::from_integer(FieldSpec::rational(), 7));
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    CHECK(permute_variables(f, perm) == f);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Swapping x and y in (x+y+z)(-x+y+z) gives (x+y+z)(x-y+z).
  const std::vector<std::size_t> swap_xy{1, 0, 2};
  CHECK(permute_variables(P("(x+y+z)*(-x+y+z)", r), swap_xy) == P("(x+y+z)*(x-y+z)", r));

  CHECK_THROWS(permute_variables(f, std::vector<std::size_t>{0, 0, 1}));

  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::size_t> p{0, 1, 2};
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::size_t> inv(3);
    for (std::size_t k = 0; k < 3; ++k) inv[p[k]] = k;
    const Polynomial a = random_polynomial(r, rng, 5);
    CHECK(permute_variables(permute_variables(a, p), inv) == a);
  }
}

TEST_CASE("exact division") {
  const RingPtr r = xyz();
  CHECK(exact_divide(P("x^2 - y^2", r), P("x - y", r)) == P("x + y", r));
  const Polynomial heron = P("(x^2+y^2+z^2)^2 - 2*(x^4+y^4+z^4)", r);
  CHECK(exact_divide(heron, P("x + y + z", r)) == P("(-x+y+z)*(x-y+z)*(x+y-z)", r));
  CHECK_FALSE(exact_divide(P("x^2 + y^2", r), P("x + y", r)));
  CHECK_THROWS_AS(exact_divide(heron, Polynomial(r)), DivisionByZero);

  std::mt19937_64 rng(17);
  for (const FieldSpec& field : testing_support::test_fields()) {
    const RingPtr rf = xyz(field);
    for (int i = 0; i < 200; ++i) {
      const Polynomial p = random_polynomial(rf, rng, 4, 3);
      const Polynomial d = random_nonzero_polynomial(rf, rng, 3, 2);
      CHECK(exact_divide(p * d, d) == p);
    }
  }
}

TEST_CASE("symmetric reduction") {
  const RingPtr r = xyz();
  const auto reduced = symmetric_reduce(P("y^4 + z^4", r), 1, 2);
  REQUIRE(reduced);
  const RingPtr ruv = reduced->ring_ptr();
  CHECK(ruv->variables.names() == std::vector<std::string>{"x", "u", "v"});
  CHECK(*reduced == P("(u^2 - 2*v)^2 - 2*v^2", ruv));
  CHECK_FALSE(symmetric_reduce(P("y - z", r), 1, 2));
  CHECK(symmetric_reduce(P("y^3*z + y*z^3 + x", r), 1, 2) == P("u^2*v - 2*v^2 + x", ruv));

  std::mt19937_64 rng(9);
  for (const FieldSpec& field : testing_support::test_fields()) {
    const RingPtr rf = xyz(field);
    for (int i = 0; i < 100; ++i) {
      const Polynomial a = random_polynomial(rf, rng, 4, 4);
      const Polynomial sym = a + permute_variables(a, std::vector<std::size_t>{0, 2, 1});
      const auto red = symmetric_reduce(sym, 1, 2);
      REQUIRE(red);
      CHECK(symmetric_expand(*red, 1, 2, rf) == sym);
    }
  }
}

TEST_CASE("elementary symmetric polynomials") {
  const RingPtr r = xyz();
  CHECK(elementary_symmetric(r, 2) == P("x*y + y*z + x*z", r));
  const RingPtr r2 = make_ring(FieldSpec::rational(), VariableNames({"y", "z"}));
  CHECK(elementary_symmetric(r2, 1) == P("y + z", r2));
  const RingPtr r4 = make_ring(FieldSpec::rational(), VariableNames({"x", "y", "z", "w"}));
  CHECK(elementary_symmetric(r4, 4) == P("x*y*z*w", r4));
  CHECK_THROWS(elementary_symmetric(r, 0));
  CHECK_THROWS(elementary_symmetric(r, 4));
}

TEST_CASE("coefficients in one variable and monic normalization") {
  const RingPtr r = xyz();
  const auto c = coefficients_in(P("3*x^2*y + x*z + 5", r), 0);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == P("5", r));
  CHECK(c[1] == P("z", r));
  CHECK(c[2] == P("3*y", r));
  const auto [unit, monic] = make_monic(P("2*x + 4*y", r));
  CHECK(unit == FieldElement::from_integer(FieldSpec::rational(), 2));
  CHECK(monic == P("x + 2*y", r));
}
