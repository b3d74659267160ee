#pragma once

// Decision procedure for the reducibility of g, of diagonal quadratics and of
// the Cayley-Menger determinant. Every reducible verdict carries a
// certificate whose product is re-checked when it is built.

#include "cmirred/family.hpp"
#include "cmirred/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmirred {

enum class RuleTag {
  Char2Collapse,
  TZeroSquare,
  DiagonalQuadratic,  ///< reducible diagonal quadratic, case 1, 2 or 3
  DiagonalIrreducible,
  QuadraticDiscriminant,
  HeronCase,
  OmegaCase,
  IrreducibleCCDD,  ///< t != 0, a != 0
  IrreducibleDDD,   ///< t != 0, a = 0 outside the two exceptional cases
  IrreducibleCM,
  HeronCM,
};

std::string rule_tag_name(RuleTag tag);

/// The hypotheses that were checked for the rule that fired. Only the
/// fields relevant to that rule are set.
struct RuleConditions {
  std::uint64_t characteristic = 0;
  std::optional<unsigned> m;
  std::optional<unsigned> n;
  std::optional<bool> a_is_zero;
  std::optional<std::string> t;
  std::optional<bool> omega_exists;
  std::optional<std::string> omega;
  std::optional<std::string> discriminant;
};

struct ClassificationRule {
  RuleTag tag;
  int diagonal_case = 0;  ///< 1, 2 or 3 for DiagonalQuadratic
  RuleConditions conditions;
};

enum class IrreducibilityClaim { Irreducible, Unverified };

struct CertificateFactor {
  Polynomial factor;
  unsigned multiplicity;
  IrreducibilityClaim claim;
};

class FactorizationCertificate {
 public:
  /// Normalizes each factor to leading coefficient 1 (the unit absorbs the
  /// scaling), merges equal factors and throws InternalAssertion unless
  /// unit * prod(factor^mult) == input.
  FactorizationCertificate(Polynomial input, FieldElement unit, std::vector<CertificateFactor> factors,
                           ClassificationRule rule);

  /// Builds without normalization or checking; for tests that tamper.
  static FactorizationCertificate unchecked(Polynomial input, FieldElement unit,
                                            std::vector<CertificateFactor> factors, ClassificationRule rule);

  const Polynomial& input() const { return input_; }
  const FieldElement& unit() const { return unit_; }
  const std::vector<CertificateFactor>& factors() const { return factors_; }
  const ClassificationRule& rule() const { return rule_; }

  Polynomial product() const;

 private:
  FactorizationCertificate(Polynomial input, FieldElement unit, std::vector<CertificateFactor> factors,
                           ClassificationRule rule, bool);

  Polynomial input_;
  FieldElement unit_;
  std::vector<CertificateFactor> factors_;
  ClassificationRule rule_;
};

bool verify_certificate(const FactorizationCertificate& c);

enum class VerdictKind { Reducible, Irreducible, ZeroPolynomial };

std::string verdict_kind_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind;
  ClassificationRule rule;
  /// Present for reducible verdicts over a supported field.
  std::optional<FactorizationCertificate> certificate;
  /// Symbolic result for characteristic-2 requests, e.g. "(a + x1 + x2 + x3)^4".
  std::optional<std::string> closed_form;
};

/// Marks a request over a field of characteristic 2, which has no FieldSpec.
struct Characteristic2 {};

/// g over a characteristic-2 field. a and t are integer literals (reduced
/// mod 2) or symbol names kept verbatim.
struct Char2GParams {
  unsigned m;
  std::string a = "0";
  std::string t = "0";
};

/// a x^2 + b x + c over the field of a. Requires a != 0 (PreconditionError).
Verdict factor_quadratic(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// c0 + c1 x1^2 + ... + cm xm^2, coefficients[0] = c0. Requires m >= 1 and
/// c1..cm != 0.
Verdict classify_diagonal_quadratic(const FieldSpec& field, const std::vector<FieldElement>& coefficients);

/// Characteristic-2 branch: every c_j is an integer literal mod 2.
Verdict classify_diagonal_quadratic(Characteristic2, const std::vector<long>& coefficients);

Verdict classify_g(const GParams& params);

/// Characteristic-2 collapse g = (1 - t)(a + x1 + ... + xm)^4.
Verdict classify_g(const Char2GParams& params);

Verdict classify_cayley_menger(const FieldSpec& field, unsigned n);

/// Always throws: the classification does not cover characteristic 2.
[[noreturn]] Verdict classify_cayley_menger(Characteristic2, unsigned n);

}  // namespace cmirred
