#include "cmirred/field.hpp"

#include "cmirred/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cmirred {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

u64 inverse_mod(u64 a, u64 p) {
  if (a % p == 0) throw DivisionByZero();
  return pow_mod(a, p - 2, p);
}

u64 reduce_integer(const Integer& n, u64 p) {
  Integer r = n % Integer(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 c = pow_mod(z, q, p);
  u64 r = pow_mod(a, (q + 1) / 2, p);
  u64 t = pow_mod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    r = mul_mod(r, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  const auto valid = [](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    return !part.empty() && std::all_of(part.begin(), part.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const auto slash = s.find('/');
  const std::string_view whole(s);
  if (slash == std::string::npos) {
    if (!valid(whole)) throw ParseError("invalid number '" + s + "'");
  } else if (!valid(whole.substr(0, slash)) || !valid(whole.substr(slash + 1)) ||
             whole[slash + 1] == '-') {
    throw ParseError("invalid fraction '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("invalid number '" + s + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw PreconditionError("characteristic 2 is not a supported coefficient field");
  if (!is_prime(p)) throw PreconditionError("F_p requires p prime, got " + std::to_string(p));
  return FieldSpec(FieldKind::Prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  text = trim(text);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "Q" || s == "QQ" || s == "q") return rational();
  if (s == "Q(w)" || s == "Qw" || s == "Q(omega)" || s == "QQ(w)") return cyclotomic();
  std::string_view digits(s);
  if (digits.starts_with("GF(") && digits.ends_with(")")) {
    digits = digits.substr(3, digits.size() - 4);
  } else if (digits.starts_with("F") || digits.starts_with("f")) {
    digits.remove_prefix(1);
  }
  u64 p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("unknown field '" + std::string(text) + "'");
  return prime(p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::Cyclotomic:
      return "Q(w)";
    case FieldKind::Prime:
      return "F" + std::to_string(modulus_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement FieldElement::zero(const FieldSpec& spec) { return from_integer(spec, 0L); }

FieldElement FieldElement::one(const FieldSpec& spec) { return from_integer(spec, 1L); }

FieldElement FieldElement::from_integer(const FieldSpec& spec, const Integer& n) {
  switch (spec.kind()) {
    case FieldKind::Rational:
      return FieldElement(spec, Rational(n));
    case FieldKind::Prime:
      return FieldElement(spec, reduce_integer(n, spec.modulus()));
    case FieldKind::Cyclotomic:
      return FieldElement(spec, CyclotomicValue{Rational(n), Rational(0)});
  }
  throw PreconditionError("unknown field kind");
}

FieldElement FieldElement::from_rational(const FieldSpec& spec, const Rational& q) {
  switch (spec.kind()) {
    case FieldKind::Rational:
      return FieldElement(spec, q);
    case FieldKind::Prime: {
      const u64 p = spec.modulus();
      const u64 num = reduce_integer(q.get_num(), p);
      const u64 den = reduce_integer(q.get_den(), p);
      return FieldElement(spec, mul_mod(num, inverse_mod(den, p), p));
    }
    case FieldKind::Cyclotomic:
      return FieldElement(spec, CyclotomicValue{q, Rational(0)});
  }
  throw PreconditionError("unknown field kind");
}

FieldElement FieldElement::cyclotomic(const Rational& r, const Rational& s) {
  return FieldElement(FieldSpec::cyclotomic(), CyclotomicValue{r, s});
}

FieldElement FieldElement::parse(const FieldSpec& spec, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty field literal");
  if (spec.kind() != FieldKind::Cyclotomic) {
    if (text.find('w') != std::string_view::npos)
      throw ParseError("'w' is only meaningful over Q(w)");
    return from_rational(spec, parse_rational(text));
  }
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto wpos = s.find('w');
  if (wpos == std::string::npos) return cyclotomic(parse_rational(s), 0);
  if (wpos + 1 != s.size()) throw ParseError("malformed cyclotomic literal '" + s + "'");
  // Split "<r><sign><s>*w" at the last sign that is not at position 0.
  std::size_t split = 0;
  for (std::size_t i = wpos; i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  Rational real(0);
  std::string wpart = s.substr(split, wpos - split);
  if (split > 0) real = parse_rational(s.substr(0, split));
  if (!wpart.empty() && wpart.back() == '*') wpart.pop_back();
  Rational coef;
  if (wpart.empty() || wpart == "+") {
    coef = 1;
  } else if (wpart == "-") {
    coef = -1;
  } else {
    coef = parse_rational(wpart);
  }
  return cyclotomic(real, coef);
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!(spec_ == o.spec_))
    throw FieldMismatch("mixed-field operands: " + spec_.name() + " and " + o.spec_.name());
}

bool FieldElement::is_zero() const {
  switch (spec_.kind()) {
    case FieldKind::Rational:
      return sgn(std::get<Rational>(value_)) == 0;
    case FieldKind::Prime:
      return std::get<u64>(value_) == 0;
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<CyclotomicValue>(value_);
      return sgn(c.r) == 0 && sgn(c.s) == 0;
    }
  }
  return false;
}

bool FieldElement::is_one() const { return *this == one(spec_); }

FieldElement FieldElement::operator-() const {
  switch (spec_.kind()) {
    case FieldKind::Rational:
      return FieldElement(spec_, Rational(-std::get<Rational>(value_)));
    case FieldKind::Prime: {
      const u64 v = std::get<u64>(value_);
      return FieldElement(spec_, v == 0 ? 0 : spec_.modulus() - v);
    }
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<CyclotomicValue>(value_);
      return FieldElement(spec_, CyclotomicValue{-c.r, -c.s});
    }
  }
  return *this;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(o);
  switch (spec_.kind()) {
    case FieldKind::Rational:
      std::get<Rational>(value_) += std::get<Rational>(o.value_);
      break;
    case FieldKind::Prime: {
      const u64 p = spec_.modulus();
      u64& v = std::get<u64>(value_);
      const u64 w = std::get<u64>(o.value_);
      v = (v >= p - w) ? v - (p - w) : v + w;
      break;
    }
    case FieldKind::Cyclotomic: {
      auto& c = std::get<CyclotomicValue>(value_);
      const auto& d = std::get<CyclotomicValue>(o.value_);
      c.r += d.r;
      c.s += d.s;
      break;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(o);
  switch (spec_.kind()) {
    case FieldKind::Rational:
      std::get<Rational>(value_) *= std::get<Rational>(o.value_);
      break;
    case FieldKind::Prime: {
      u64& v = std::get<u64>(value_);
      v = mul_mod(v, std::get<u64>(o.value_), spec_.modulus());
      break;
    }
    case FieldKind::Cyclotomic: {
      // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w.
      auto& x = std::get<CyclotomicValue>(value_);
      const auto& y = std::get<CyclotomicValue>(o.value_);
      const Rational bd = x.s * y.s;
      Rational r = x.r * y.r - bd;
      Rational s = x.r * y.s + x.s * y.r - bd;
      x.r = std::move(r);
      x.s = std::move(s);
      break;
    }
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (spec_.kind()) {
    case FieldKind::Rational:
      return FieldElement(spec_, Rational(1 / std::get<Rational>(value_)));
    case FieldKind::Prime:
      return FieldElement(spec_, inverse_mod(std::get<u64>(value_), spec_.modulus()));
    case FieldKind::Cyclotomic: {
      // Conjugate of a + bw is a + bw^2 = (a - b) - bw; norm a^2 - ab + b^2.
      const auto& c = std::get<CyclotomicValue>(value_);
      const Rational norm = c.r * c.r - c.r * c.s + c.s * c.s;
      return FieldElement(spec_, CyclotomicValue{Rational((c.r - c.s) / norm), Rational(-c.s / norm)});
    }
  }
  throw PreconditionError("unknown field kind");
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = one(spec_);
  FieldElement base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!(spec_ == o.spec_)) return false;
  switch (spec_.kind()) {
    case FieldKind::Rational:
      return std::get<Rational>(value_) == std::get<Rational>(o.value_);
    case FieldKind::Prime:
      return std::get<u64>(value_) == std::get<u64>(o.value_);
    case FieldKind::Cyclotomic: {
      const auto& a = std::get<CyclotomicValue>(value_);
      const auto& b = std::get<CyclotomicValue>(o.value_);
      return a.r == b.r && a.s == b.s;
    }
  }
  return false;
}

const Rational& FieldElement::rational() const {
  if (spec_.kind() != FieldKind::Rational) throw PreconditionError("not a rational element");
  return std::get<Rational>(value_);
}

std::uint64_t FieldElement::residue() const {
  if (spec_.kind() != FieldKind::Prime) throw PreconditionError("not a prime-field element");
  return std::get<u64>(value_);
}

const CyclotomicValue& FieldElement::cyclotomic_value() const {
  if (spec_.kind() != FieldKind::Cyclotomic) throw PreconditionError("not a Q(w) element");
  return std::get<CyclotomicValue>(value_);
}

std::string FieldElement::to_string() const {
  switch (spec_.kind()) {
    case FieldKind::Rational:
      return rational_string(std::get<Rational>(value_));
    case FieldKind::Prime:
      return std::to_string(std::get<u64>(value_));
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<CyclotomicValue>(value_);
      if (sgn(c.s) == 0) return rational_string(c.r);
      std::string wpart;
      if (c.s == 1) {
        wpart = "w";
      } else if (c.s == -1) {
        wpart = "-w";
      } else {
        wpart = rational_string(c.s) + "*w";
      }
      if (sgn(c.r) == 0) return wpart;
      if (wpart.front() != '-') wpart = "+" + wpart;
      return rational_string(c.r) + wpart;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::optional<FieldElement> is_square(const FieldElement& a) {
  const FieldSpec& spec = a.spec();
  switch (spec.kind()) {
    case FieldKind::Rational: {
      auto r = rational_sqrt(a.rational());
      if (!r) return std::nullopt;
      return FieldElement::from_rational(spec, *r);
    }
    case FieldKind::Prime: {
      auto r = sqrt_mod(a.residue(), spec.modulus());
      if (!r) return std::nullopt;
      const u64 p = spec.modulus();
      return FieldElement::from_integer(spec, Integer(static_cast<unsigned long>(std::min(*r, (p - *r) % p))));
    }
    case FieldKind::Cyclotomic: {
      // Work in the basis {1, sqrt(-3)}: w = (-1 + sqrt(-3)) / 2.
      const auto& v = a.cyclotomic_value();
      const Rational alpha = v.r - v.s / 2;
      const Rational beta = v.s / 2;
      const auto n = rational_sqrt(Rational(alpha * alpha + 3 * beta * beta));
      if (!n) return std::nullopt;
      // (c + d sqrt(-3))^2 = alpha + beta sqrt(-3) forces c^2 + 3d^2 = n.
      Rational c, d;
      const auto c_opt = rational_sqrt(Rational((alpha + *n) / 2));
      if (!c_opt) return std::nullopt;
      c = *c_opt;
      if (sgn(c) != 0) {
        d = beta / (2 * c);
      } else {
        const auto d_opt = rational_sqrt(Rational(-alpha / 3));
        if (!d_opt) return std::nullopt;
        d = *d_opt;
      }
      // c + d sqrt(-3) = (c + d) + 2d w.
      FieldElement root = FieldElement::cyclotomic(Rational(c + d), Rational(2 * d));
      if (!(root * root == a)) return std::nullopt;
      return root;
    }
  }
  return std::nullopt;
}

std::optional<FieldElement> primitive_cube_root(const FieldSpec& spec) {
  switch (spec.kind()) {
    case FieldKind::Rational:
      return std::nullopt;
    case FieldKind::Cyclotomic:
      return FieldElement::omega();
    case FieldKind::Prime: {
      // Roots of l^2 + l + 1 are (-1 +- sqrt(-3)) / 2.
      const u64 p = spec.modulus();
      if (p == 3) return std::nullopt;
      const auto s = sqrt_mod(p - 3, p);
      if (!s) return std::nullopt;
      const u64 half = inverse_mod(2, p);
      const u64 r1 = mul_mod((p - 1 + *s) % p, half, p);
      const u64 r2 = mul_mod((p - 1 + p - *s) % p, half, p);
      return FieldElement::from_integer(spec, Integer(static_cast<unsigned long>(std::min(r1, r2))));
    }
  }
  return std::nullopt;
}

std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b) {
  switch (a.spec().kind()) {
    case FieldKind::Rational: {
      const int c = cmp(a.rational(), b.rational());
      return c <=> 0;
    }
    case FieldKind::Prime:
      return a.residue() <=> b.residue();
    case FieldKind::Cyclotomic: {
      const auto& x = a.cyclotomic_value();
      const auto& y = b.cyclotomic_value();
      if (const int c = cmp(x.r, y.r); c != 0) return c <=> 0;
      return cmp(x.s, y.s) <=> 0;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace cmirred
