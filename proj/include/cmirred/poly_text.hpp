#pragma once

// Text format for polynomials: terms joined by + / -, factors as name^k,
// coefficients in field-literal syntax ("3/2", "(1+2*w)"). The parser also
// accepts general expressions with parentheses, products and powers.

#include "cmirred/poly.hpp"

#include <string_view>

namespace cmirred {

/// Parses `text` in the given ring. Over Q(w) the bare identifier `w` is the
/// cube root of unity unless the ring has a variable of that name.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Identifiers occurring in `text` in natural order (x2 < x10), excluding the
/// cube-root token `w` over Q(w).
VariableNames infer_variables(std::string_view text, const FieldSpec& field);

inline Polynomial parse_polynomial(std::string_view text, const FieldSpec& field) {
  return parse_polynomial(text, make_ring(field, infer_variables(text, field)));
}

}  // namespace cmirred
