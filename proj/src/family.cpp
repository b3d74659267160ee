#include "cmirred/family.hpp"

#include "cmirred/errors.hpp"

#include <bit>
#include <unordered_map>

namespace cmirred {

Polynomial build_g(const GParams& params) {
  if (params.m < 3) throw PreconditionError("the family requires m >= 3 variables");
  if (!(params.a.spec() == params.field) || !(params.t.spec() == params.field))
    throw FieldMismatch("a and t must lie in the coefficient field");
  const RingPtr ring = make_ring(params.field, VariableNames::indexed(params.m));
  const FieldElement a2 = params.a * params.a;
  Polynomial squares = Polynomial::constant(ring, a2);
  Polynomial fourths = Polynomial::constant(ring, a2 * a2);
  for (std::size_t i = 0; i < params.m; ++i) {
    const FieldElement one = FieldElement::one(params.field);
    squares.add_term(Monomial::variable(params.m, i, 2), one);
    fourths.add_term(Monomial::variable(params.m, i, 4), one);
  }
  return squares * squares - params.t * fourths;
}

Polynomial build_f(const FieldSpec& field, unsigned m, const FieldElement& t) {
  return build_g({field, m, FieldElement::zero(field), t});
}

Polynomial build_phi(const FieldSpec& field, unsigned m, const FieldElement& t) {
  if (m < 2) throw PreconditionError("phi needs at least two distance variables");
  std::vector<std::string> names{"x"};
  for (unsigned i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  const RingPtr ring = make_ring(field, VariableNames(std::move(names)));
  const Polynomial f = build_g({field, m + 1, FieldElement::zero(field), t});
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i <= m; ++i) images.push_back(Polynomial::variable(ring, i));
  return substitute(f, ring, images);
}

// ---------------------------------------------------------------------------

CayleyMengerRing::CayleyMengerRing(unsigned n, const FieldSpec& field) : n_(n) {
  if (n < 1) throw PreconditionError("simplex dimension must be positive");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n + 1; ++i) {
    for (unsigned j = i + 1; j <= n + 1; ++j) names.push_back(variable_name(i, j));
  }
  ring_ = make_ring(field, VariableNames(std::move(names)));
}

std::string CayleyMengerRing::variable_name(unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

std::size_t CayleyMengerRing::position(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  if (i == j || i < 1 || j > n_ + 1) throw PreconditionError("no variable x_{i,j} for these indices");
  // Rows 1..i-1 contribute (n+1-r) variables each.
  std::size_t pos = 0;
  for (unsigned r = 1; r < i; ++r) pos += n_ + 1 - r;
  return pos + (j - i - 1);
}

Polynomial laplace_determinant(const RingPtr& ring, std::size_t size,
                               const std::function<Polynomial(std::size_t, std::size_t)>& entry) {
  if (size == 0) return Polynomial::constant(ring, 1);
  if (size > 16) throw PreconditionError("matrix too large for Laplace expansion");
  std::vector<std::vector<Polynomial>> matrix;
  for (std::size_t r = 0; r < size; ++r) {
    std::vector<Polynomial> row;
    for (std::size_t c = 0; c < size; ++c) row.push_back(entry(r, c));
    matrix.push_back(std::move(row));
  }
  // The minor on columns `mask` always uses the last popcount(mask) rows.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  std::function<Polynomial(std::uint32_t)> minor = [&](std::uint32_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(ring, 1);
    if (const auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = size - static_cast<std::size_t>(std::popcount(mask));
    Polynomial acc(ring);
    unsigned index = 0;
    for (std::size_t c = 0; c < size; ++c) {
      if (!(mask & (1U << c))) continue;
      const Polynomial& e = matrix[row][c];
      if (!e.is_zero()) {
        Polynomial t = e * minor(mask & ~(1U << c));
        if (index % 2 == 0) {
          acc += t;
        } else {
          acc -= t;
        }
      }
      ++index;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor((size == 32) ? ~0U : ((1U << size) - 1));
}

Polynomial bordered_determinant(unsigned n, const RingPtr& ring,
                                const std::function<Polynomial(unsigned, unsigned)>& edge_entry) {
  return laplace_determinant(ring, n + 2, [&](std::size_t r, std::size_t c) {
    if (r == c) return Polynomial(ring);
    if (r == 0 || c == 0) return Polynomial::constant(ring, 1);
    return edge_entry(static_cast<unsigned>(r), static_cast<unsigned>(c));
  });
}

Polynomial cayley_menger(unsigned n, const FieldSpec& field) {
  if (n < 2 || n > 6) throw PreconditionError("cayley_menger supports 2 <= n <= 6");
  const CayleyMengerRing cm(n, field);
  const RingPtr& ring = cm.ring();
  return bordered_determinant(n, ring, [&](unsigned i, unsigned j) {
    return Polynomial::term(ring, Monomial::variable(ring->arity(), cm.position(i, j), 2),
                            FieldElement::one(field));
  });
}

RingPtr prekite_ring(unsigned n, const FieldSpec& field) {
  std::vector<std::string> names{"x"};
  for (unsigned j = 1; j <= n; ++j) names.push_back(CayleyMengerRing::variable_name(j, n + 1));
  return make_ring(field, VariableNames(std::move(names)));
}

PrekiteReduction prekite_reduction(unsigned n, const FieldSpec& field) {
  if (n < 3 || n > 6) throw PreconditionError("prekite_reduction supports 3 <= n <= 6");
  const CayleyMengerRing cm(n, field);
  const Polynomial m = cayley_menger(n, field);
  const RingPtr target = prekite_ring(n, field);
  const Polynomial x = Polynomial::variable(target, 0);

  std::vector<Polynomial> images(cm.ring()->arity(), Polynomial(target));
  for (unsigned i = 1; i <= n + 1; ++i) {
    for (unsigned j = i + 1; j <= n + 1; ++j) {
      images[cm.position(i, j)] = (j <= n) ? x : Polynomial::variable(target, i);
    }
  }
  Polynomial reduced = substitute(m, target, images);

  Polynomial squares = x.pow(2);
  Polynomial fourths = x.pow(4);
  for (unsigned j = 1; j <= n; ++j) {
    const Polynomial y = Polynomial::variable(target, j);
    squares += y.pow(2);
    fourths += y.pow(4);
  }
  Polynomial h = FieldElement::from_integer(field, static_cast<long>(n)) * fourths - squares * squares;

  const Polynomial expected = (-x.pow(2)).pow(n - 2) * h;
  if (!(reduced == expected))
    throw InternalAssertion("pre-kite identity M* = (-x^2)^(n-2) H failed for n = " + std::to_string(n));
  return {std::move(reduced), std::move(h)};
}

EdgeRule parse_edge_rule(std::string_view name) {
  if (name == "sum") return EdgeRule::Sum;
  if (name == "product") return EdgeRule::Product;
  if (name == "squared-sum") return EdgeRule::SquaredSum;
  if (name == "eisenstein") return EdgeRule::Eisenstein;
  throw PreconditionError("unknown edge rule '" + std::string(name) +
                          "' (expected sum, product, squared-sum, eisenstein)");
}

std::string edge_rule_name(EdgeRule rule) {
  switch (rule) {
    case EdgeRule::Sum: return "sum";
    case EdgeRule::Product: return "product";
    case EdgeRule::SquaredSum: return "squared-sum";
    case EdgeRule::Eisenstein: return "eisenstein";
  }
  return "?";
}

Polynomial special_family_substitution(unsigned n, EdgeRule rule, const FieldSpec& field) {
  if (n < 2 || n > 6) throw PreconditionError("special_family_substitution supports 2 <= n <= 6");
  const RingPtr ring = make_ring(field, VariableNames::indexed(n + 1));
  return bordered_determinant(n, ring, [&](unsigned i, unsigned j) {
    const Polynomial xi = Polynomial::variable(ring, i - 1);
    const Polynomial xj = Polynomial::variable(ring, j - 1);
    switch (rule) {
      case EdgeRule::Sum: return xi + xj;
      case EdgeRule::Product: return xi * xj;
      case EdgeRule::SquaredSum: return (xi + xj).pow(2);
      case EdgeRule::Eisenstein: return xi * xi + xi * xj + xj * xj;
    }
    throw PreconditionError("unknown edge rule");
  });
}

}  // namespace cmirred
