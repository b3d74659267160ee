#include "doctest.h"
#include "support.hpp"

#include "cmirred/errors.hpp"

using namespace cmirred;
using testing_support::random_element;
using testing_support::random_nonzero;

namespace {

FieldElement q(const char* text) { return FieldElement::parse(FieldSpec::rational(), text); }
FieldElement fp(std::uint64_t p, long v) { return FieldElement::from_integer(FieldSpec::prime(p), v); }

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::rational().characteristic() == 0);
  CHECK(FieldSpec::cyclotomic().characteristic() == 0);
  CHECK(FieldSpec::prime(7).characteristic() == 7);
  CHECK(FieldSpec::prime(3).name() == "F3");
  CHECK_THROWS_AS(FieldSpec::prime(2), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::prime(9), PreconditionError);
  CHECK(FieldSpec::parse("Q") == FieldSpec::rational());
  CHECK(FieldSpec::parse("Q(w)") == FieldSpec::cyclotomic());
  CHECK(FieldSpec::parse("F13") == FieldSpec::prime(13));
  CHECK(FieldSpec::parse("13") == FieldSpec::prime(13));
  CHECK_THROWS(FieldSpec::parse("banana"));
}

TEST_CASE("rational arithmetic") {
  CHECK(q("1/2") + q("1/3") == q("5/6"));
  CHECK(q("4/6").rational() == Rational(2, 3));
  CHECK((q("3") / q("-6")).to_string() == "-1/2");
  CHECK((q("-3") / q("-6")).rational().get_den() == 2);
  CHECK_THROWS_AS(q("2/-4"), ParseError);
  CHECK_THROWS_AS(q("1/2") / q("0"), DivisionByZero);
  CHECK_THROWS_AS(q("0").inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
  CHECK(fp(7, 3) * fp(7, 5) == fp(7, 1));
  CHECK(fp(7, -1).residue() == 6);
  CHECK((fp(7, 3) / fp(7, 5)).residue() == 2);
  CHECK(FieldElement::parse(FieldSpec::prime(7), "1/2").residue() == 4);
  CHECK_THROWS_AS(fp(7, 3) + fp(5, 3), FieldMismatch);
  CHECK_THROWS_AS(fp(7, 3) + q("1"), FieldMismatch);
}

TEST_CASE("cyclotomic arithmetic") {
  const FieldElement w = FieldElement::omega();
  CHECK(w * w == FieldElement::cyclotomic(-1, -1));
  CHECK(w.pow(3) == FieldElement::one(FieldSpec::cyclotomic()));
  const FieldElement x = FieldElement::parse(FieldSpec::cyclotomic(), "1/2-3*w");
  CHECK(x == FieldElement::cyclotomic(Rational(1, 2), -3));
  CHECK(x * x.inverse() == FieldElement::one(FieldSpec::cyclotomic()));
  CHECK(FieldElement::parse(FieldSpec::cyclotomic(), "-w") == -w);
}

TEST_CASE("square roots") {
  const auto r = is_square(q("4/9"));
  REQUIRE(r);
  CHECK((*r == q("2/3") || *r == q("-2/3")));
  CHECK_FALSE(is_square(q("2")));
  CHECK_FALSE(is_square(q("-4")));

  // Squares mod 7, by exhaustion.
  std::vector<bool> residue(7, false);
  for (long x = 0; x < 7; ++x) residue[static_cast<std::size_t>(x * x % 7)] = true;
  for (long a = 0; a < 7; ++a) CHECK(is_square(fp(7, a)).has_value() == residue[static_cast<std::size_t>(a)]);
  CHECK_FALSE(is_square(fp(7, 3)));

  const FieldSpec qw = FieldSpec::cyclotomic();
  const auto root = is_square(FieldElement::from_integer(qw, -3));
  REQUIRE(root);
  const FieldElement expected = FieldElement::cyclotomic(1, 2);
  CHECK((*root == expected || *root == -expected));
  CHECK_FALSE(is_square(FieldElement::from_integer(qw, 2)));
  CHECK_FALSE(is_square(FieldElement::omega() + FieldElement::from_integer(qw, 3)));  // norm 7
}

TEST_CASE("primitive cube roots") {
  const auto w7 = primitive_cube_root(FieldSpec::prime(7));
  REQUIRE(w7);
  CHECK(w7->residue() == 2);
  CHECK_FALSE(primitive_cube_root(FieldSpec::rational()));
  CHECK_FALSE(primitive_cube_root(FieldSpec::prime(5)));
  CHECK_FALSE(primitive_cube_root(FieldSpec::prime(3)));
  CHECK(primitive_cube_root(FieldSpec::cyclotomic()) == FieldElement::omega());

  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 19ULL, 31ULL, 37ULL, 97ULL, 1000003ULL}) {
    const FieldSpec field = FieldSpec::prime(p);
    const auto w = primitive_cube_root(field);
    CHECK(w.has_value() == (p % 3 == 1));
    if (w) {
      CHECK((*w * *w + *w + FieldElement::one(field)).is_zero());
      // Smallest root: no smaller residue is a primitive cube root.
      for (std::uint64_t r = 2; r < w->residue() && r < 5000; ++r) {
        const auto e = FieldElement::from_integer(field, static_cast<long>(r));
        CHECK_FALSE((e * e + e + FieldElement::one(field)).is_zero());
      }
    }
  }
}

TEST_CASE("field properties on random elements") {
  std::mt19937_64 rng(11);
  for (const FieldSpec& field : testing_support::test_fields()) {
    CAPTURE(field.name());
    for (int i = 0; i < 500; ++i) {
      const FieldElement a = random_nonzero(field, rng);
      const FieldElement b = random_element(field, rng);
      const FieldElement c = random_element(field, rng);
      CHECK(a * a.inverse() == FieldElement::one(field));
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a - b) + b == a);
      const auto root = is_square(a * a);
      REQUIRE(root);
      CHECK(*root * *root == a * a);
      CHECK(FieldElement::parse(field, a.to_string()) == a);
    }
  }
}

TEST_CASE("square roots in a larger prime field") {
  const FieldSpec field = FieldSpec::prime(1000003);
  const FieldSpec field2 = FieldSpec::prime(998244353);  // p - 1 = 2^23 * 119
  std::mt19937_64 rng(5);
  for (const FieldSpec& f : {field, field2}) {
    for (int i = 0; i < 200; ++i) {
      const FieldElement a = random_element(f, rng);
      const auto root = is_square(a * a);
      REQUIRE(root);
      CHECK(*root * *root == a * a);
      // Euler's criterion as the independent oracle for non-squares.
      const bool euler = a.is_zero() || a.pow((f.modulus() - 1) / 2).is_one();
      CHECK(is_square(a).has_value() == euler);
    }
  }
}
