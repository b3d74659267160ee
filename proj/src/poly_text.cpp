#include "cmirred/poly_text.hpp"

#include "cmirred/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cmirred {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : tokens_(tokenize(text)), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(peek().offset));
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept(Tok::Minus)) {
      negate = true;
    } else {
      accept(Tok::Plus);
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept(Tok::Plus)) {
        acc += term();
      } else if (accept(Tok::Minus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept(Tok::Star)) {
        acc *= power();
      } else if (accept(Tok::Slash)) {
        const Polynomial d = power();
        if (!d.is_constant()) fail("division by a non-constant");
        if (d.is_zero()) throw DivisionByZero();
        acc = d.leading_term().second.inverse() * acc;
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept(Tok::Caret)) {
      if (peek().kind != Tok::Number) fail("expected exponent");
      const std::string digits = take().text;
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        const std::string digits = take().text;
        return Polynomial::constant(ring_, FieldElement::from_integer(ring_->field, Integer(digits)));
      }
      case Tok::Ident: {
        const std::string name = take().text;
        if (const auto pos = ring_->variables.position(name)) return Polynomial::variable(ring_, *pos);
        if (name == "w" && ring_->field.kind() == FieldKind::Cyclotomic)
          return Polynomial::constant(ring_, FieldElement::omega());
        throw ParseError("unknown variable '" + name + "'");
      }
      case Tok::LParen: {
        take();
        Polynomial inner = expr();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return inner;
      }
      case Tok::Minus: {
        take();
        return -power();
      }
      default:
        fail("unexpected token '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

// Natural order: digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string na = a.substr(i, ie - i);
      const std::string nb = b.substr(j, je - j);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

VariableNames infer_variables(std::string_view text, const FieldSpec& field) {
  std::set<std::string> idents;
  for (const auto& t : tokenize(text)) {
    if (t.kind != Tok::Ident) continue;
    if (t.text == "w" && field.kind() == FieldKind::Cyclotomic) continue;
    idents.insert(t.text);
  }
  std::vector<std::string> names(idents.begin(), idents.end());
  std::sort(names.begin(), names.end(), natural_less);
  return VariableNames(std::move(names));
}

}  // namespace cmirred
