#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// Terms are kept in a map ordered by graded-lex (descending), so the first
// entry is always the leading term. Variable 0 is the largest variable.

#include "cmirred/field.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cmirred {

/// Exponent vector of fixed arity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t arity, std::size_t pos, std::uint32_t power = 1);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  unsigned total_degree() const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other) as a precondition: other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic comparison; true when a sorts strictly before b in
/// descending order (a is the larger monomial).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Unique display names, one per variable position.
class VariableNames {
 public:
  VariableNames() = default;
  explicit VariableNames(std::vector<std::string> names);
  /// "x1".."x<count>" (or "<prefix>1"...).
  static VariableNames indexed(std::size_t count, const std::string& prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> position(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  bool operator==(const VariableNames&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Ring {
  FieldSpec field;
  VariableNames variables;

  std::size_t arity() const { return variables.size(); }
  bool operator==(const Ring&) const = default;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const FieldSpec& field, VariableNames variables);

class Polynomial {
 public:
  using Terms = std::map<Monomial, FieldElement, GrlexGreater>;

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t pos);
  static Polynomial term(RingPtr ring, Monomial m, const FieldElement& c);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const FieldSpec& field() const { return ring_->field; }
  std::size_t arity() const { return ring_->arity(); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Undefined (nullopt) for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  /// Largest exponent of variable `pos`; nullopt for zero.
  std::optional<unsigned> degree_in(std::size_t pos) const;

  /// Leading term under grlex; throws PreconditionError on zero.
  const Terms::value_type& leading_term() const;
  FieldElement coefficient(const Monomial& m) const;
  bool is_constant() const;

  /// Adds c * m, dropping the entry when it cancels.
  void add_term(const Monomial& m, const FieldElement& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const FieldElement& c) { return c * p; }
  Polynomial pow(unsigned e) const;
  /// Multiplies by the single term c * m.
  Polynomial times_term(const Monomial& m, const FieldElement& c) const;

  bool operator==(const Polynomial& o) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  /// Printable form; parse_polynomial reads it back.
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  Terms terms_;
};

Polynomial scalar_mul(const FieldElement& c, const Polynomial& p);

struct Homogeneity {
  bool homogeneous;
  /// Set only for nonzero homogeneous polynomials.
  std::optional<unsigned> degree;
};

Homogeneity is_homogeneous(const Polynomial& p);

/// Sum of the terms of maximal total degree. Throws on zero.
Polynomial leading_homogeneous_component(const Polynomial& p);

/// Replaces the listed positions by polynomials in p's own ring; other
/// variables are kept.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment);

/// Full substitution into another ring: images[i] replaces variable i.
Polynomial substitute(const Polynomial& p, const RingPtr& target, std::span<const Polynomial> images);

/// perm[i] is the new position of variable i. The variable names stay put,
/// so the result lives in the same ring.
Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> perm);

/// q with p == d * q, or nullopt when d does not divide p. Throws on d == 0.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

/// Rewrites a polynomial symmetric in (x_i, x_j) in terms of u = x_i + x_j
/// (stored at position i) and v = x_i * x_j (stored at position j). Returns
/// nullopt when p is not symmetric in the pair.
std::optional<Polynomial> symmetric_reduce(const Polynomial& p, std::size_t i, std::size_t j);

/// Inverse map of symmetric_reduce: u -> x_i + x_j, v -> x_i * x_j, into
/// `target` (which must have the arity of the reduced ring).
Polynomial symmetric_expand(const Polynomial& reduced, std::size_t i, std::size_t j, const RingPtr& target);

/// e_j in all variables of `ring`.
Polynomial elementary_symmetric(const RingPtr& ring, std::size_t j);

/// Coefficients of p as a polynomial in variable `pos`: result[k] is the
/// coefficient of x_pos^k (with x_pos no longer occurring).
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t pos);

/// Scales p so its grlex-leading coefficient is 1. Returns (lc, monic p).
std::pair<FieldElement, Polynomial> make_monic(const Polynomial& p);

}  // namespace cmirred
