#include "doctest.h"
#include "gen.hpp"
#include "jacpoly/poly.hpp"

using namespace jacpoly;

namespace {

PuiseuxPoly P(const char* s) { return parse_poly(s); }

const char* kF = "(x+1)^2*(y+1)^4+(x+1)*(y+1)";
const char* kG = "(x+1)^3*(y+1)^6+3/2*(x+1)^2*(y+1)^3+3/8*x";

// Ascending coefficients of alpha'.
std::vector<Rational> derivative(const std::vector<Rational>& a) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < a.size(); ++k) out.push_back(a[k] * static_cast<long>(k));
  return out;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(floor_of(make_rational(-1, 2)) == -1);
  CHECK(ceil_of(make_rational(-1, 2)) == 0);
  CHECK(to_long(Rational(7)) == 7);
  CHECK_THROWS_AS(to_long(make_rational(1, 2)), std::domain_error);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(gcd(12L, 18L) == 6);
  CHECK(lcm(4L, 6L) == 12);
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("multiplication and powers") {
  CHECK(P("(x+1)*(x-1)") == P("x^2-1"));
  CHECK(to_string(P("(x+1)*(x-1)")) == "x^2 - 1");

  PuiseuxPoly f = P("(x+1)*(y+1)^2");
  CHECK(pow(f, 2) == f * f);
  CHECK(pow(f, 2) == P("(x+1)^2*(y+1)^4"));

  testgen::Rng rng(11);
  for (int i = 0; i < 10; ++i) CHECK(pow(testgen::random_poly(rng, 3, 3, 0.5), 0) == P("1"));
}

TEST_CASE("jacobian examples") {
  CHECK(jacobian(P("x"), P("y")) == P("1"));
  PuiseuxPoly f = P(kF);
  CHECK(jacobian(f, f).is_zero());
  CHECK(jacobian(f, P(kG)) == P("-3/8*(x+1)"));
}

TEST_CASE("shift_substitute examples") {
  PuiseuxPoly f = P(kF);
  CHECK(shift_substitute(f, -1, 0, 1) == P("(x+1)^2*y^4+(x+1)*y"));

  PuiseuxPoly s = shift_substitute(P("y"), 1, 1, 12);
  CHECK(s == P("y + x^(-1/12)"));
  CHECK(s.tag() == RingTag::q12(12));

  CHECK(shift_substitute(f, 0, 2, 3) == f);
}

TEST_CASE("coefficient lookup") {
  CHECK(P(kF).coefficient({2, 4}) == 1);
  CHECK(P("x+y").coefficient({99, 1}) == 0);
  CHECK(P("(x+1)*(y+1)").coefficient({0, 0}) == 1);
}

TEST_CASE("ring tags") {
  CHECK_THROWS_AS(join(RingTag::q12(2), RingTag::q14(3)), RingMismatch);
  CHECK(join(RingTag::q12(2), RingTag::q12(3)) == RingTag::q12(6));
  CHECK(promote(RingTag::q12(2), RingTag::q14(3)).kind == RingTag::Kind::Laurent);
  CHECK_THROWS(parse_poly("x^(1/2)", RingTag::plain()));
  CHECK(parse_poly("x^(1/2)*y").tag() == RingTag::q12(2));
  CHECK(swap_xy(parse_poly("x^(1/2)*y")).tag() == RingTag::q14(2));
  CHECK_THROWS_AS(P("x^(1/2)") + P("y^(1/3)") * P("x"), RingMismatch);
}

TEST_CASE("parse errors carry positions") {
  try {
    P("x+*y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(P("(x+1"), ParseError);
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("z"), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  testgen::Rng rng(1);
  for (int i = 0; i < 40; ++i) {
    PuiseuxPoly f = testgen::random_poly(rng, 3, 3, 0.5);
    PuiseuxPoly g = testgen::random_poly(rng, 3, 2, 0.5);
    PuiseuxPoly h = testgen::random_poly(rng, 2, 3, 0.5);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("jacobian antisymmetry and Leibniz rule") {
  testgen::Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    PuiseuxPoly f = testgen::random_poly(rng, 3, 3, 0.5);
    PuiseuxPoly g = testgen::random_poly(rng, 3, 3, 0.5);
    PuiseuxPoly h = testgen::random_poly(rng, 3, 3, 0.5);
    CHECK(jacobian(f, g) == -jacobian(g, f));
    CHECK(jacobian(f * g, h) == f * jacobian(g, h) + g * jacobian(f, h));
  }
}

TEST_CASE("chain rule for compositions") {
  testgen::Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    std::vector<Rational> alpha = testgen::random_uni(rng, 0, rng.range(2, 4));
    PuiseuxPoly W = testgen::random_poly(rng, 2, 2, 0.6);
    PuiseuxPoly G = testgen::random_poly(rng, 3, 3, 0.5);
    CHECK(compose(alpha, W) == testgen::substitute(testgen::uni_in(alpha, false), W, P("y")));
    CHECK(jacobian(compose(alpha, W), G) == compose(derivative(alpha), W) * jacobian(W, G));
  }
}

TEST_CASE("shift by c then -c is the identity") {
  testgen::Rng rng(4);
  for (int i = 0; i < 25; ++i) {
    PuiseuxPoly f = testgen::random_poly(rng, 3, 3, 0.5);
    Rational c = rng.nonzero();
    long u = rng.range(0, 3), v = rng.range(1, 4);
    CHECK(shift_substitute(shift_substitute(f, c, u, v), -c, u, v) == f);
  }
}

TEST_CASE("parse after print is the identity") {
  testgen::Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    PuiseuxPoly f = testgen::random_poly(rng, 4, 4, 0.4);
    if (rng.coin()) f = shift_substitute(f, rng.nonzero(), rng.range(1, 3), rng.range(2, 5));
    std::string text = to_string(f);
    CHECK(parse_poly(text) == f);
    CHECK(to_string(parse_poly(text)) == text);
  }
}
