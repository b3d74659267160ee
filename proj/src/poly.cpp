#include "cmirred/poly.hpp"

#include "cmirred/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cmirred {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t arity, std::size_t pos, std::uint32_t power) {
  Monomial m(arity);
  m.exps_.at(pos) = power;
  return m;
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// VariableNames / Ring

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

VariableNames VariableNames::indexed(std::size_t count, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return VariableNames(std::move(names));
}

std::optional<std::size_t> VariableNames::position(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(const FieldSpec& field, VariableNames variables) {
  return std::make_shared<const Ring>(Ring{field, std::move(variables)});
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("polynomial needs a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial(p.arity()), c);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  const FieldSpec field = ring->field;
  return constant(std::move(ring), FieldElement::from_integer(field, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t pos) {
  if (pos >= ring->arity()) throw PreconditionError("variable position out of range");
  const FieldSpec field = ring->field;
  const std::size_t arity = ring->arity();
  return term(std::move(ring), Monomial::variable(arity, pos), FieldElement::one(field));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (m.arity() != p.arity()) throw RingMismatch("monomial arity does not match ring");
  p.add_term(m, c);
  return p;
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.total_degree();
}

std::optional<unsigned> Polynomial::degree_in(std::size_t pos) const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[pos]);
  return d;
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return *terms_.begin();
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field()) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
  if (!(c.spec() == field())) throw FieldMismatch("coefficient field differs from ring field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw RingMismatch("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial operator*(const FieldElement& c, const Polynomial& p) {
  Polynomial r(p.ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, pc] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, pc * c);
  return r;
}

Polynomial scalar_mul(const FieldElement& c, const Polynomial& p) { return c * p; }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  // Multiplying by a monomial preserves grlex order.
  for (const auto& [pm, pc] : terms_) r.terms_.emplace_hint(r.terms_.end(), pm * m, pc * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) return false;
  return terms_.size() == o.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first && x.second == y.second; });
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != arity()) throw PreconditionError("evaluation point has wrong dimension");
  FieldElement sum = FieldElement::zero(field());
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] != 0) t *= point[i].pow(m[i]);
    }
    sum += t;
  }
  return sum;
}

namespace {

std::string monomial_string(const Monomial& m, const VariableNames& names) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_string(m, ring_->variables);
    bool negative = false;
    std::string coef;
    if (field().kind() == FieldKind::Rational ||
        (field().kind() == FieldKind::Cyclotomic && sgn(c.cyclotomic_value().s) == 0)) {
      const Rational& q = field().kind() == FieldKind::Rational ? c.rational() : c.cyclotomic_value().r;
      negative = sgn(q) < 0;
      coef = Rational(abs(q)).get_str();
    } else if (field().kind() == FieldKind::Cyclotomic) {
      coef = "(" + c.to_string() + ")";
    } else {
      coef = c.to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural operations

Homogeneity is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return {true, std::nullopt};
  const unsigned d = *p.total_degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() != d) return {false, std::nullopt};
  }
  return {true, d};
}

Polynomial leading_homogeneous_component(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("leading homogeneous component of zero is undefined");
  const unsigned d = *p.total_degree();
  Polynomial r(p.ring_ptr());
  for (const auto& [m, c] : p.terms()) {
    if (m.total_degree() != d) break;
    r.add_term(m, c);
  }
  return r;
}

Polynomial substitute(const Polynomial& p, const RingPtr& target, std::span<const Polynomial> images) {
  if (images.size() != p.arity()) throw RingMismatch("substitution needs one image per variable");
  for (const auto& img : images) {
    if (!(img.ring() == *target)) throw RingMismatch("substituted polynomial is not in the target ring");
  }
  if (!(target->field == p.field())) throw RingMismatch("substitution cannot change the field");
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(p.arity());
  const auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.arity() && !t.is_zero(); ++i) {
      if (m[i] != 0) t *= power_of(i, m[i]);
    }
    result += t;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment) {
  std::vector<Polynomial> images;
  images.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const auto it = assignment.find(i);
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else {
      images.push_back(Polynomial::variable(p.ring_ptr(), i));
    }
  }
  for (const auto& [pos, img] : assignment) {
    if (pos >= p.arity()) throw PreconditionError("substitution position out of range");
  }
  return substitute(p, p.ring_ptr(), images);
}

Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> perm) {
  const std::size_t n = p.arity();
  if (perm.size() != n) throw PreconditionError("permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (std::size_t target : perm) {
    if (target >= n || hit[target]) throw PreconditionError("not a permutation of the variable positions");
    hit[target] = true;
  }
  Polynomial r(p.ring_ptr());
  for (const auto& [m, c] : p.terms()) {
    Monomial moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[perm[i]] = m[i];
    r.add_term(moved, c);
  }
  return r;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (!(p.ring() == d.ring())) throw RingMismatch("exact_divide operands in different rings");
  const auto& [lead_m, lead_c] = d.leading_term();
  const FieldElement lead_inv = lead_c.inverse();
  Polynomial remainder = p;
  Polynomial quotient(p.ring_ptr());
  // If p = d*q then LT(remainder) = LT(d) * LT(q - partial) at every step, so
  // a non-divisible leading term proves d does not divide p.
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lead_m.divides(rm)) return std::nullopt;
    const Monomial qm = lead_m.quotient_of(rm);
    const FieldElement qc = rc * lead_inv;
    quotient.add_term(qm, qc);
    for (const auto& [dm, dc] : d.terms()) remainder.add_term(dm * qm, -(dc * qc));
  }
  return quotient;
}

namespace {

std::string fresh_name(const VariableNames& names, std::string base, std::size_t skip) {
  for (;;) {
    const auto pos = names.position(base);
    if (!pos || *pos == skip) return base;
    base += "_";
  }
}

}  // namespace

std::optional<Polynomial> symmetric_reduce(const Polynomial& p, std::size_t i, std::size_t j) {
  const std::size_t n = p.arity();
  if (i >= n || j >= n || i == j) throw PreconditionError("symmetric_reduce needs two distinct positions");
  std::vector<std::size_t> swap(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[i], swap[j]);
  if (!(permute_variables(p, swap) == p)) return std::nullopt;

  std::vector<std::string> names = p.ring().variables.names();
  names[i] = fresh_name(p.ring().variables, "u", i);
  names[j] = fresh_name(p.ring().variables, "v", j);
  const RingPtr reduced = make_ring(p.field(), VariableNames(names));
  const Polynomial u = Polynomial::variable(reduced, i);
  const Polynomial v = Polynomial::variable(reduced, j);

  // Power sums P_k = x_i^k + x_j^k: P_1 = u, P_2 = u^2 - 2v, P_k = u P_{k-1} - v P_{k-2}.
  std::vector<Polynomial> power_sums{Polynomial::constant(reduced, 2), u};
  const auto power_sum = [&](unsigned k) -> const Polynomial& {
    while (power_sums.size() <= k) {
      const std::size_t s = power_sums.size();
      power_sums.push_back(u * power_sums[s - 1] - v * power_sums[s - 2]);
    }
    return power_sums[k];
  };

  Polynomial result(reduced);
  for (const auto& [m, c] : p.terms()) {
    const unsigned a = m[i];
    const unsigned b = m[j];
    if (a < b) continue;  // its mirror term carries it
    Monomial rest = m;
    rest[i] = 0;
    rest[j] = b;  // v^b sits at position j
    if (a == b) {
      result.add_term(rest, c);
    } else {
      // x_i^a x_j^b + x_i^b x_j^a = v^b * P_{a-b}
      result += power_sum(a - b).times_term(rest, c);
    }
  }
  return result;
}

Polynomial symmetric_expand(const Polynomial& reduced, std::size_t i, std::size_t j, const RingPtr& target) {
  if (target->arity() != reduced.arity()) throw RingMismatch("target ring arity differs");
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < reduced.arity(); ++k) images.push_back(Polynomial::variable(target, k));
  images[i] = Polynomial::variable(target, i) + Polynomial::variable(target, j);
  images[j] = Polynomial::variable(target, i) * Polynomial::variable(target, j);
  return substitute(reduced, target, images);
}

Polynomial elementary_symmetric(const RingPtr& ring, std::size_t j) {
  const std::size_t n = ring->arity();
  if (j < 1 || j > n) throw PreconditionError("elementary symmetric index out of range");
  Polynomial r(ring);
  const FieldElement one = FieldElement::one(ring->field);
  // Enumerate j-subsets via a selection mask.
  std::vector<bool> select(n, false);
  std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(j), true);
  do {
    Monomial m(n);
    for (std::size_t k = 0; k < n; ++k) m[k] = select[k] ? 1 : 0;
    r.add_term(m, one);
  } while (std::prev_permutation(select.begin(), select.end()));
  return r;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t pos) {
  if (pos >= p.arity()) throw PreconditionError("variable position out of range");
  const unsigned deg = p.degree_in(pos).value_or(0);
  std::vector<Polynomial> out(deg + 1, Polynomial(p.ring_ptr()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[pos] = 0;
    out[m[pos]].add_term(rest, c);
  }
  return out;
}

std::pair<FieldElement, Polynomial> make_monic(const Polynomial& p) {
  const FieldElement lc = p.leading_term().second;
  return {lc, lc.inverse() * p};
}

}  // namespace cmirred
