#include "cmirred/classify.hpp"

#include "cmirred/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cmirred {

std::string rule_tag_name(RuleTag tag) {
  switch (tag) {
    case RuleTag::Char2Collapse: return "Char2Collapse";
    case RuleTag::TZeroSquare: return "TZeroSquare";
    case RuleTag::DiagonalQuadratic: return "DiagonalQuadratic";
    case RuleTag::DiagonalIrreducible: return "DiagonalIrreducible";
    case RuleTag::QuadraticDiscriminant: return "QuadraticDiscriminant";
    case RuleTag::HeronCase: return "HeronCase";
    case RuleTag::OmegaCase: return "OmegaCase";
    case RuleTag::IrreducibleCCDD: return "IrreducibleCCDD";
    case RuleTag::IrreducibleDDD: return "IrreducibleDDD";
    case RuleTag::IrreducibleCM: return "IrreducibleCM";
    case RuleTag::HeronCM: return "HeronCM";
  }
  return "?";
}

std::string verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Reducible: return "Reducible";
    case VerdictKind::Irreducible: return "Irreducible";
    case VerdictKind::ZeroPolynomial: return "ZeroPolynomial";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Certificates

FactorizationCertificate::FactorizationCertificate(Polynomial input, FieldElement unit,
                                                   std::vector<CertificateFactor> factors, ClassificationRule rule,
                                                   bool)
    : input_(std::move(input)), unit_(std::move(unit)), factors_(std::move(factors)), rule_(std::move(rule)) {}

FactorizationCertificate FactorizationCertificate::unchecked(Polynomial input, FieldElement unit,
                                                             std::vector<CertificateFactor> factors,
                                                             ClassificationRule rule) {
  return FactorizationCertificate(std::move(input), std::move(unit), std::move(factors), std::move(rule), true);
}

FactorizationCertificate::FactorizationCertificate(Polynomial input, FieldElement unit,
                                                   std::vector<CertificateFactor> factors, ClassificationRule rule)
    : input_(std::move(input)), unit_(std::move(unit)), rule_(std::move(rule)) {
  for (auto& f : factors) {
    if (f.factor.is_constant()) throw PreconditionError("certificate factors must be non-constant");
    if (f.multiplicity == 0) throw PreconditionError("certificate factor multiplicity must be positive");
    auto [lc, monic] = make_monic(f.factor);
    unit_ *= lc.pow(f.multiplicity);
    const auto same = std::find_if(factors_.begin(), factors_.end(),
                                   [&](const CertificateFactor& g) { return g.factor == monic; });
    if (same != factors_.end()) {
      same->multiplicity += f.multiplicity;
      if (f.claim != same->claim) same->claim = IrreducibilityClaim::Unverified;
    } else {
      factors_.push_back({std::move(monic), f.multiplicity, f.claim});
    }
  }
  if (!verify_certificate(*this))
    throw InternalAssertion("certificate product does not reproduce its input (" + rule_tag_name(rule_.tag) + ")");
}

Polynomial FactorizationCertificate::product() const {
  Polynomial acc = Polynomial::constant(input_.ring_ptr(), unit_);
  for (const auto& f : factors_) acc *= f.factor.pow(f.multiplicity);
  return acc;
}

bool verify_certificate(const FactorizationCertificate& c) {
  if (!(c.unit().spec() == c.input().field())) return false;
  for (const auto& f : c.factors()) {
    if (!(f.factor.ring() == c.input().ring())) return false;
  }
  if (c.unit().is_zero()) return false;
  return c.product() == c.input();
}

// ---------------------------------------------------------------------------

namespace {

Polynomial sum_of_squares(const RingPtr& ring, const FieldElement& constant) {
  Polynomial q = Polynomial::constant(ring, constant);
  const FieldElement one = FieldElement::one(ring->field);
  for (std::size_t i = 0; i < ring->arity(); ++i) q.add_term(Monomial::variable(ring->arity(), i, 2), one);
  return q;
}

FieldElement scalar(const FieldSpec& field, long n) { return FieldElement::from_integer(field, n); }

Verdict irreducible(RuleTag tag, RuleConditions conditions) {
  return {VerdictKind::Irreducible, {tag, 0, std::move(conditions)}, std::nullopt, std::nullopt};
}

Verdict reducible(FactorizationCertificate cert) {
  ClassificationRule rule = cert.rule();
  return {VerdictKind::Reducible, std::move(rule), std::move(cert), std::nullopt};
}

/// Parses an integer literal and reduces it mod 2; nullopt for a symbol.
std::optional<int> parity(const std::string& literal) {
  std::string_view s(literal);
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  return (s.back() - '0') % 2;
}

}  // namespace

Verdict factor_quadratic(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  const FieldSpec field = a.spec();
  if (!(b.spec() == field) || !(c.spec() == field)) throw FieldMismatch("quadratic coefficients in different fields");
  if (a.is_zero()) throw PreconditionError("not a quadratic: leading coefficient is zero");
  const RingPtr ring = make_ring(field, VariableNames({"x"}));
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial h = a * x.pow(2) + b * x + Polynomial::constant(ring, c);

  const FieldElement disc = b * b - scalar(field, 4) * a * c;
  RuleConditions cond;
  cond.characteristic = field.characteristic();
  cond.discriminant = disc.to_string();

  const auto delta = is_square(disc);
  if (!delta) return irreducible(RuleTag::QuadraticDiscriminant, cond);
  const FieldElement two_a = scalar(field, 2) * a;
  const FieldElement alpha = (-b + *delta) / two_a;
  const FieldElement beta = (-b - *delta) / two_a;
  std::vector<CertificateFactor> factors{
      {x - Polynomial::constant(ring, alpha), 1, IrreducibilityClaim::Irreducible},
      {x - Polynomial::constant(ring, beta), 1, IrreducibilityClaim::Irreducible}};
  return reducible(FactorizationCertificate(h, a, std::move(factors), {RuleTag::QuadraticDiscriminant, 0, cond}));
}

Verdict classify_diagonal_quadratic(const FieldSpec& field, const std::vector<FieldElement>& coefficients) {
  if (coefficients.size() < 2) throw PreconditionError("diagonal quadratic needs at least one variable");
  const std::size_t m = coefficients.size() - 1;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (!(coefficients[j].spec() == field)) throw FieldMismatch("coefficient outside the field");
    if (j >= 1 && coefficients[j].is_zero())
      throw PreconditionError("coefficient of x" + std::to_string(j) + "^2 must be nonzero");
  }
  const RingPtr ring = make_ring(field, VariableNames::indexed(m));
  Polynomial g = Polynomial::constant(ring, coefficients[0]);
  for (std::size_t j = 1; j <= m; ++j) g.add_term(Monomial::variable(m, j - 1, 2), coefficients[j]);

  RuleConditions cond;
  cond.characteristic = field.characteristic();
  cond.m = static_cast<unsigned>(m);

  const FieldElement& lead = coefficients[m];
  std::vector<FieldElement> roots;  // sqrt(-t_j), j < m
  for (std::size_t j = 0; j < m; ++j) {
    const auto r = is_square(-(coefficients[j] / lead));
    if (!r) return irreducible(RuleTag::DiagonalIrreducible, cond);
    roots.push_back(*r);
  }
  const Polynomial xm = Polynomial::variable(ring, m - 1);
  if (m == 1) {
    const Polynomial r = Polynomial::constant(ring, roots[0]);
    std::vector<CertificateFactor> factors{{xm - r, 1, IrreducibilityClaim::Irreducible},
                                           {xm + r, 1, IrreducibilityClaim::Irreducible}};
    return reducible(FactorizationCertificate(g, lead, std::move(factors), {RuleTag::DiagonalQuadratic, 2, cond}));
  }
  if (m == 2 && coefficients[0].is_zero()) {
    const Polynomial s_x1 = roots[1] * Polynomial::variable(ring, 0);
    std::vector<CertificateFactor> factors{{xm - s_x1, 1, IrreducibilityClaim::Irreducible},
                                           {xm + s_x1, 1, IrreducibilityClaim::Irreducible}};
    return reducible(FactorizationCertificate(g, lead, std::move(factors), {RuleTag::DiagonalQuadratic, 3, cond}));
  }
  return irreducible(RuleTag::DiagonalIrreducible, cond);
}

Verdict classify_diagonal_quadratic(Characteristic2, const std::vector<long>& coefficients) {
  if (coefficients.size() < 2) throw PreconditionError("diagonal quadratic needs at least one variable");
  const std::size_t m = coefficients.size() - 1;
  for (std::size_t j = 1; j <= m; ++j) {
    if (coefficients[j] % 2 == 0)
      throw PreconditionError("coefficient of x" + std::to_string(j) + "^2 vanishes in characteristic 2");
  }
  // Over F_2 every t_j = c_j / c_m is a square (0 or 1), so h is a square.
  std::string inner = coefficients[0] % 2 != 0 ? "1" : "";
  for (std::size_t j = 1; j <= m; ++j) {
    if (!inner.empty()) inner += " + ";
    inner += "x" + std::to_string(j);
  }
  RuleConditions cond;
  cond.characteristic = 2;
  cond.m = static_cast<unsigned>(m);
  Verdict v{VerdictKind::Reducible, {RuleTag::DiagonalQuadratic, 1, cond}, std::nullopt, "(" + inner + ")^2"};
  return v;
}

Verdict classify_g(const GParams& params) {
  if (params.m < 3) throw PreconditionError("classification covers m >= 3 only");
  const FieldSpec& field = params.field;
  const unsigned m = params.m;
  const Polynomial g = build_g(params);
  const RingPtr& ring = g.ring_ptr();

  RuleConditions cond;
  cond.characteristic = field.characteristic();
  cond.m = m;
  cond.a_is_zero = params.a.is_zero();
  cond.t = params.t.to_string();

  if (params.t.is_zero()) {
    // g = q^2 with q = a^2 + sum x_i^2.
    const Polynomial q = sum_of_squares(ring, params.a * params.a);
    std::vector<FieldElement> diag{params.a * params.a};
    for (unsigned i = 0; i < m; ++i) diag.push_back(FieldElement::one(field));
    const Verdict inner = classify_diagonal_quadratic(field, diag);
    const auto claim = inner.kind == VerdictKind::Irreducible ? IrreducibilityClaim::Irreducible
                                                              : IrreducibilityClaim::Unverified;
    return reducible(FactorizationCertificate(g, FieldElement::one(field), {{q, 2, claim}},
                                              {RuleTag::TZeroSquare, 0, cond}));
  }
  if (!params.a.is_zero()) return irreducible(RuleTag::IrreducibleCCDD, cond);

  if (m == 3 && params.t == scalar(field, 2)) {
    const Polynomial x = Polynomial::variable(ring, 0);
    const Polynomial y = Polynomial::variable(ring, 1);
    const Polynomial z = Polynomial::variable(ring, 2);
    constexpr auto irr = IrreducibilityClaim::Irreducible;
    std::vector<CertificateFactor> factors{
        {x + y + z, 1, irr}, {-x + y + z, 1, irr}, {x - y + z, 1, irr}, {x + y - z, 1, irr}};
    return reducible(
        FactorizationCertificate(g, FieldElement::one(field), std::move(factors), {RuleTag::HeronCase, 0, cond}));
  }
  if (m == 3 && params.t == scalar(field, 3)) {
    const auto omega = primitive_cube_root(field);
    cond.omega_exists = omega.has_value();
    if (!omega) return irreducible(RuleTag::IrreducibleDDD, cond);
    cond.omega = omega->to_string();
    const FieldElement w = *omega;
    const FieldElement w2 = w * w;
    const FieldElement one = FieldElement::one(field);
    Polynomial first(ring), second(ring);
    first.add_term(Monomial::variable(3, 0, 2), one);
    first.add_term(Monomial::variable(3, 1, 2), w);
    first.add_term(Monomial::variable(3, 2, 2), w2);
    second.add_term(Monomial::variable(3, 0, 2), one);
    second.add_term(Monomial::variable(3, 1, 2), w2);
    second.add_term(Monomial::variable(3, 2, 2), w);
    constexpr auto irr = IrreducibilityClaim::Irreducible;
    return reducible(FactorizationCertificate(g, scalar(field, -2), {{first, 1, irr}, {second, 1, irr}},
                                              {RuleTag::OmegaCase, 0, cond}));
  }
  return irreducible(RuleTag::IrreducibleDDD, cond);
}

Verdict classify_g(const Char2GParams& params) {
  if (params.m < 3) throw PreconditionError("classification covers m >= 3 only");
  RuleConditions cond;
  cond.characteristic = 2;
  cond.m = params.m;
  cond.t = params.t;
  const auto t_parity = parity(params.t);
  const auto a_parity = parity(params.a);
  if (a_parity) cond.a_is_zero = *a_parity == 0;

  if (t_parity && *t_parity == 1) {
    return {VerdictKind::ZeroPolynomial, {RuleTag::Char2Collapse, 0, cond}, std::nullopt, "0"};
  }
  std::string linear;
  if (!a_parity) {
    linear = params.a;
  } else if (*a_parity == 1) {
    linear = "1";
  }
  for (unsigned i = 1; i <= params.m; ++i) {
    if (!linear.empty()) linear += " + ";
    linear += "x" + std::to_string(i);
  }
  std::string form = "(" + linear + ")^4";
  if (!t_parity) form = "(1 - " + params.t + ")*" + form;
  return {VerdictKind::Reducible, {RuleTag::Char2Collapse, 0, cond}, std::nullopt, form};
}

Verdict classify_cayley_menger(const FieldSpec& field, unsigned n) {
  if (n < 2) throw PreconditionError("Cayley-Menger classification needs n >= 2");
  RuleConditions cond;
  cond.characteristic = field.characteristic();
  cond.n = n;
  if (n >= 3) return irreducible(RuleTag::IrreducibleCM, cond);

  const Polynomial m = cayley_menger(2, field);
  const CayleyMengerRing cm(2, field);
  const RingPtr& ring = cm.ring();
  const Polynomial z = Polynomial::variable(ring, cm.position(1, 2));
  const Polynomial y = Polynomial::variable(ring, cm.position(1, 3));
  const Polynomial x = Polynomial::variable(ring, cm.position(2, 3));
  constexpr auto irr = IrreducibilityClaim::Irreducible;
  std::vector<CertificateFactor> factors{
      {x + y + z, 1, irr}, {-x + y + z, 1, irr}, {x - y + z, 1, irr}, {x + y - z, 1, irr}};
  return reducible(
      FactorizationCertificate(m, scalar(field, -1), std::move(factors), {RuleTag::HeronCM, 0, cond}));
}

Verdict classify_cayley_menger(Characteristic2, unsigned) {
  throw PreconditionError("the Cayley-Menger classification requires characteristic != 2");
}

}  // namespace cmirred
