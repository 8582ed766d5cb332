#include <cctype>

#include "jacpoly/poly.hpp"

namespace jacpoly {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

// Intermediate values live in the Laurent ring; the caller narrows the tag.
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PuiseuxPoly run() {
    skip();
    if (at_end()) throw ParseError("empty input", pos_);
    PuiseuxPoly r = expr();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() {
    skip();
    return at_end() ? '\0' : s_[pos_];
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static PuiseuxPoly lift(PuiseuxPoly f) {
    return f.with_tag(promote(f.tag(), RingTag::laurent(f.tag().p)));
  }

  PuiseuxPoly expr() {
    PuiseuxPoly acc(RingTag::laurent());
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    PuiseuxPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      PuiseuxPoly next = term();
      if (c == '+') acc += next;
      else acc -= next;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  PuiseuxPoly term() {
    PuiseuxPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        std::size_t at = pos_;
        ++pos_;
        PuiseuxPoly d = factor();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division only by a nonzero constant", at);
        acc *= Rational(1 / d.coefficient({0, 0}));
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  PuiseuxPoly factor() {
    PuiseuxPoly base = primary();
    if (peek() != '^') return base;
    std::size_t at = pos_;
    ++pos_;
    Rational e = exponent();
    if (is_integer(e) && e >= 0) return pow(base, to_long(e));
    if (!base.is_monomial())
      throw ParseError("negative or fractional power of a non-monomial", at);
    const auto& [ex, c] = base.leading_term();
    if (!is_integer(e) && c != 1)
      throw ParseError("fractional power of a non-unit coefficient", at);
    Rational coef = is_integer(e) ? pow(c, to_long(e)) : Rational(1);
    ExponentPair scaled{Rational(ex.x * e), Rational(ex.y * e)};
    return lift(PuiseuxPoly::monomial(coef, scaled, RingTag::laurent(infer_tag(scaled).p)));
  }

  Rational exponent() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      bool neg = false;
      c = peek();
      if (c == '-' || c == '+') {
        neg = c == '-';
        ++pos_;
      }
      Rational r = number();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return neg ? Rational(-r) : r;
    }
    bool neg = false;
    if (c == '-') {
      neg = true;
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", start);
    Rational r = parse_rational(s_.substr(start, pos_ - start));
    return neg ? Rational(-r) : r;
  }

  Rational number() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected number", start);
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string_view den = s_.substr(dstart, pos_ - dstart);
      if (den.find_first_not_of('0') == std::string_view::npos)
        throw ParseError("zero denominator", dstart);
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  PuiseuxPoly primary() {
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return lift(PuiseuxPoly::var_x());
    }
    if (c == 'y') {
      ++pos_;
      return lift(PuiseuxPoly::var_y());
    }
    if (c == '(') {
      ++pos_;
      PuiseuxPoly inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return PuiseuxPoly::constant(number(), RingTag::laurent());
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }
};

}  // namespace

PuiseuxPoly parse_poly(std::string_view text, std::optional<RingTag> tag) {
  PuiseuxPoly raw = Parser(text).run();
  if (!tag) return raw.minimal_tag();
  try {
    return raw.with_tag(*tag);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace jacpoly
