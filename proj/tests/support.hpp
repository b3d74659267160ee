#pragma once

#include "cmirred/field.hpp"
#include "cmirred/poly.hpp"

#include <random>
#include <vector>

namespace testing_support {

using namespace cmirred;

inline FieldElement random_element(const FieldSpec& field, std::mt19937_64& rng, long range = 9) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 5);
  switch (field.kind()) {
    case FieldKind::Rational: {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      return FieldElement::from_rational(field, q);
    }
    case FieldKind::Prime:
      return FieldElement::from_integer(field, static_cast<long>(rng() % field.modulus()));
    case FieldKind::Cyclotomic: {
      Rational r(num(rng), den(rng)), s(num(rng), den(rng));
      r.canonicalize();
      s.canonicalize();
      return FieldElement::cyclotomic(r, s);
    }
  }
  return FieldElement::zero(field);
}

inline FieldElement random_nonzero(const FieldSpec& field, std::mt19937_64& rng) {
  for (;;) {
    FieldElement e = random_element(field, rng);
    if (!e.is_zero()) return e;
  }
}

/// Random polynomial with up to `terms` terms of total degree <= `degree`.
inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, unsigned terms = 4,
                                    unsigned degree = 3) {
  Polynomial p(ring);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(ring->arity());
    unsigned budget = static_cast<unsigned>(rng() % (degree + 1));
    for (unsigned d = 0; d < budget; ++d) m[rng() % ring->arity()] += 1;
    p.add_term(m, random_element(ring->field, rng));
  }
  return p;
}

inline Polynomial random_nonzero_polynomial(const RingPtr& ring, std::mt19937_64& rng, unsigned terms = 4,
                                            unsigned degree = 3) {
  for (;;) {
    Polynomial p = random_polynomial(ring, rng, terms, degree);
    if (!p.is_zero()) return p;
  }
}

inline std::vector<FieldSpec> test_fields() {
  return {FieldSpec::rational(), FieldSpec::prime(5), FieldSpec::prime(7), FieldSpec::prime(13),
          FieldSpec::cyclotomic()};
}

}  // namespace testing_support
