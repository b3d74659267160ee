#pragma once

// Exact scalars over Q, prime fields F_p (p odd) and Q(w) with w^2 + w + 1 = 0.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace cmirred {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { Rational, Prime, Cyclotomic };

class FieldSpec {
 public:
  static FieldSpec rational() { return FieldSpec(FieldKind::Rational, 0); }
  static FieldSpec cyclotomic() { return FieldSpec(FieldKind::Cyclotomic, 0); }
  /// Throws PreconditionError unless p is an odd prime.
  static FieldSpec prime(std::uint64_t p);

  /// Accepts "Q", "QQ", "Q(w)", "Qw", "F7", "GF(7)" or a bare odd prime "7".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  /// p for Prime(p), 0 otherwise.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// r + s*w with w^2 = -1 - w.
struct CyclotomicValue {
  Rational r;
  Rational s;
};

class FieldElement {
 public:
  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  /// Image of an integer under the canonical map Z -> k.
  static FieldElement from_integer(const FieldSpec& spec, const Integer& n);
  static FieldElement from_integer(const FieldSpec& spec, long n) {
    return from_integer(spec, Integer(n));
  }
  /// Throws DivisionByZero when the denominator vanishes in k.
  static FieldElement from_rational(const FieldSpec& spec, const Rational& q);
  /// Requires a Cyclotomic spec.
  static FieldElement cyclotomic(const Rational& r, const Rational& s);
  static FieldElement omega() { return cyclotomic(0, 1); }

  /// Literal syntax: "p/q" for Q, integers (or p/q) for F_p, "r+s*w" for Q(w).
  static FieldElement parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;

  /// Representation accessors; throw PreconditionError for the wrong kind.
  const Rational& rational() const;
  std::uint64_t residue() const;
  const CyclotomicValue& cyclotomic_value() const;

  std::string to_string() const;

 private:
  using Value = std::variant<Rational, std::uint64_t, CyclotomicValue>;
  FieldElement(FieldSpec spec, Value v) : spec_(spec), value_(std::move(v)) {}
  void require_same(const FieldElement& o) const;

  FieldSpec spec_;
  Value value_;
};

/// A root r with r*r == a when a is a square in its field.
std::optional<FieldElement> is_square(const FieldElement& a);

/// The smallest (by residue) primitive cube root of unity in F_p, or w in Q(w).
std::optional<FieldElement> primitive_cube_root(const FieldSpec& spec);

/// Canonical total order inside one field (residue, or rational pair); only
/// for deterministic output, not a field order.
std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b);

}  // namespace cmirred
