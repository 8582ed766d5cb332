#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jacpoly/rational.hpp"

namespace jacpoly {

struct ExponentPair {
  Rational x;
  Rational y;

  ExponentPair() = default;
  ExponentPair(Rational xe, Rational ye) : x(std::move(xe)), y(std::move(ye)) {}
  ExponentPair(long xe, long ye) : x(xe), y(ye) {}

  ExponentPair operator+(const ExponentPair& o) const { return {Rational(x + o.x), Rational(y + o.y)}; }
  ExponentPair operator-(const ExponentPair& o) const { return {Rational(x - o.x), Rational(y - o.y)}; }
  bool operator==(const ExponentPair& o) const { return x == o.x && y == o.y; }
  bool operator!=(const ExponentPair& o) const { return !(*this == o); }
};

// Graded-lex: total degree first, then the x exponent.
struct GradedLexLess {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const;
};

// Which ring a polynomial lives in.
//  Plain    Q[x, y]
//  Q12(p)   Q[x^{+-1/p}, y]
//  Q14(p)   Q[x, y^{+-1/p}]
//  Laurent  Q[x^{+-1/p}, y^{+-1/p}], used for intermediate expansions
struct RingTag {
  enum class Kind { Plain, Q12, Q14, Laurent };
  Kind kind = Kind::Plain;
  long p = 1;

  static RingTag plain() { return {}; }
  static RingTag q12(long p) { return {Kind::Q12, p}; }
  static RingTag q14(long p) { return {Kind::Q14, p}; }
  static RingTag laurent(long p = 1) { return {Kind::Laurent, p}; }

  bool admits(const ExponentPair& e) const;
  bool operator==(const RingTag& o) const { return kind == o.kind && p == o.p; }
  std::string name() const;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Smallest ring containing both; throws RingMismatch for Q12 against Q14.
RingTag join(const RingTag& a, const RingTag& b);
// Like join, but falls back to Laurent instead of throwing.
RingTag promote(const RingTag& a, const RingTag& b);
// Smallest ring admitting a single exponent.
RingTag infer_tag(const ExponentPair& e);

class PuiseuxPoly {
 public:
  using TermMap = std::map<ExponentPair, Rational, GradedLexLess>;

  PuiseuxPoly() = default;
  explicit PuiseuxPoly(RingTag tag) : tag_(tag) {}

  static PuiseuxPoly constant(const Rational& c, RingTag tag = RingTag::plain());
  // The tag defaults to the smallest ring admitting the exponent.
  static PuiseuxPoly monomial(const Rational& c, const ExponentPair& e,
                              std::optional<RingTag> tag = std::nullopt);
  static PuiseuxPoly var_x() { return monomial(1, {1, 0}); }
  static PuiseuxPoly var_y() { return monomial(1, {0, 1}); }

  const RingTag& tag() const { return tag_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(const ExponentPair& e) const;
  // Graded-lex largest term; requires nonzero.
  const std::pair<const ExponentPair, Rational>& leading_term() const;

  // Accumulates c into the coefficient of e; validates against the tag.
  void add_term(const ExponentPair& e, const Rational& c);

  // Same terms under another tag; throws if some exponent is not admitted.
  PuiseuxPoly with_tag(RingTag tag) const;
  // Same terms under the smallest admissible tag.
  PuiseuxPoly minimal_tag() const;

  PuiseuxPoly& operator+=(const PuiseuxPoly& o);
  PuiseuxPoly& operator-=(const PuiseuxPoly& o);
  PuiseuxPoly& operator*=(const Rational& c);

  // Mathematical equality of the term maps; tags are not compared.
  bool operator==(const PuiseuxPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const PuiseuxPoly& o) const { return !(*this == o); }

 private:
  RingTag tag_;
  TermMap terms_;
};

PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b);
PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b);
PuiseuxPoly operator-(PuiseuxPoly a);
PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
PuiseuxPoly operator*(PuiseuxPoly a, const Rational& c);
PuiseuxPoly operator*(const Rational& c, PuiseuxPoly a);

PuiseuxPoly pow(const PuiseuxPoly& f, unsigned long k);
// Shifts every exponent by e.
PuiseuxPoly shift_exponents(const PuiseuxPoly& f, const ExponentPair& e);

PuiseuxPoly derivative_x(const PuiseuxPoly& f);
PuiseuxPoly derivative_y(const PuiseuxPoly& f);
// f_x g_y - f_y g_x.
PuiseuxPoly jacobian(const PuiseuxPoly& f, const PuiseuxPoly& g);

// Image under x -> x, y -> y + c x^{-u/v}; the result carries Q12(lcm(v, p)).
PuiseuxPoly shift_substitute(const PuiseuxPoly& f, const Rational& c, long u, long v);
// Exchanges the roles of x and y; Q12 and Q14 tags swap.
PuiseuxPoly swap_xy(const PuiseuxPoly& f);

// alpha(W) for alpha given by ascending coefficients.
PuiseuxPoly compose(const std::vector<Rational>& alpha, const PuiseuxPoly& w);

// Canonical printing in descending graded-lex order.
std::string to_string(const PuiseuxPoly& f);
std::string exponent_string(const Rational& e);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Expands the text into canonical form. With a tag, every exponent must be
// admitted by it; without one the smallest admissible tag is chosen.
PuiseuxPoly parse_poly(std::string_view text, std::optional<RingTag> tag = std::nullopt);

}  // namespace jacpoly
