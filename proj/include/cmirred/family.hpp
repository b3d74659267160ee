#pragma once

// Constructors for the distance-relation family
//   g = (a^2 + x1^2 + ... + xm^2)^2 - t (a^4 + x1^4 + ... + xm^4)
// and for the symbolic Cayley-Menger determinant.

#include "cmirred/poly.hpp"

#include <functional>
#include <utility>

namespace cmirred {

struct GParams {
  FieldSpec field;
  unsigned m;  ///< number of x-variables, at least 3
  FieldElement a;
  FieldElement t;
};

/// Builds g in the ring k[x1..xm]. Throws PreconditionError when m < 3.
Polynomial build_g(const GParams& params);

/// g with a = 0.
Polynomial build_f(const FieldSpec& field, unsigned m, const FieldElement& t);

/// f in m+1 variables named x, x1, ..., xm: the side length becomes an
/// indeterminate. Requires m >= 2.
Polynomial build_phi(const FieldSpec& field, unsigned m, const FieldElement& t);

/// Variables x{i}_{j} for 1 <= i < j <= n+1, ordered lexicographically on (i,j).
class CayleyMengerRing {
 public:
  CayleyMengerRing(unsigned n, const FieldSpec& field);

  unsigned dimension() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  /// Position of x_{i,j}; symmetric in (i,j). Requires i != j, both in 1..n+1.
  std::size_t position(unsigned i, unsigned j) const;

  static std::string variable_name(unsigned i, unsigned j);

 private:
  unsigned n_;
  RingPtr ring_;
};

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoized on the set of columns still in play.
Polynomial laplace_determinant(const RingPtr& ring, std::size_t size,
                               const std::function<Polynomial(std::size_t, std::size_t)>& entry);

/// The (n+2)x(n+2) bordered Cayley-Menger determinant. Requires 2 <= n <= 6.
Polynomial cayley_menger(unsigned n, const FieldSpec& field = FieldSpec::rational());

/// The same determinant with entry (i,j), 1 <= i != j <= n+1, supplied by the
/// caller instead of x_{i,j}^2.
Polynomial bordered_determinant(unsigned n, const RingPtr& ring,
                                const std::function<Polynomial(unsigned, unsigned)>& edge_entry);

struct PrekiteReduction {
  Polynomial reduced;  ///< M with x_{i,j} -> x for all i < j <= n
  Polynomial h;        ///< n(x^4 + sum y_j^4) - (x^2 + sum y_j^2)^2
};

/// Ring of the reduction: x, x1_{n+1}, ..., xn_{n+1}.
RingPtr prekite_ring(unsigned n, const FieldSpec& field);

/// Computes M* and H and checks M* == (-x^2)^(n-2) H exactly; throws
/// InternalAssertion if it does not hold. Requires 3 <= n <= 6.
PrekiteReduction prekite_reduction(unsigned n, const FieldSpec& field = FieldSpec::rational());

enum class EdgeRule {
  Sum,         ///< x_i + x_j
  Product,     ///< x_i * x_j
  SquaredSum,  ///< (x_i + x_j)^2
  Eisenstein,  ///< x_i^2 + x_i x_j + x_j^2
};

EdgeRule parse_edge_rule(std::string_view name);
std::string edge_rule_name(EdgeRule rule);

/// Cayley-Menger determinant with each x_{i,j}^2 replaced by rule(x_i, x_j)
/// over vertex variables x1..x{n+1}. Requires 2 <= n <= 6.
Polynomial special_family_substitution(unsigned n, EdgeRule rule, const FieldSpec& field = FieldSpec::rational());

}  // namespace cmirred
