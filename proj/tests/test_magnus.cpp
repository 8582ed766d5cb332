#include "doctest.h"
#include "gen.hpp"
#include "jacpoly/magnus.hpp"
#include "oracles.hpp"

using namespace jacpoly;

namespace {

PuiseuxPoly P(const char* s) { return parse_poly(s); }

// Product of factorials in the denominator, by direct loops.
Rational multinomial_oracle(const Rational& c, const std::vector<long>& ms) {
  Rational num = 1, den = 1;
  long k = 0;
  for (long m : ms)
    for (long i = 1; i <= m; ++i, ++k) {
      num *= c - k;
      den *= i;
    }
  return num / den;
}

}  // namespace

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(make_rational(1, 2), {1}) == make_rational(1, 2));
  CHECK(multinomial(make_rational(7, 3), {}) == 1);
  CHECK(multinomial(make_rational(-1, 2), {2}) == make_rational(3, 8));
  CHECK(multinomial(5, {2, 3}) == 10);
  CHECK(binomial(make_rational(3, 2), 3) == make_rational(-1, 16));

  testgen::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    Rational c = rng.nonzero();
    std::vector<long> ms;
    for (long k = rng.range(0, 3); k > 0; --k) ms.push_back(rng.range(0, 3));
    CHECK(multinomial(c, ms) == multinomial_oracle(c, ms));
  }
}

TEST_CASE("fractional power expansion") {
  MagnusContext ctx = make_magnus_context(P("x+y^2"), P("y"), {0, 1});
  CHECK(ctx.r == 2);
  CHECK(ctx.H == P("y"));
  auto s = frac_power_expand(ctx, make_rational(1, 2), 2);
  CHECK(s[0].evaluate_monomial(ctx.H) == P("y"));
  CHECK(s[1].is_zero());
  CHECK(s[2].evaluate_monomial(ctx.H) == P("1/2*x*y^(-1)"));
  CHECK(s[2].cleared(ctx.H, 1) == P("1/2*x"));
  // Squaring the truncation reproduces y^2 + x t^2.
  auto sq = s * s;
  CHECK(sq[0].evaluate_monomial(ctx.H) == P("y^2"));
  CHECK(sq[1].is_zero());
  CHECK(sq[2].evaluate_monomial(ctx.H) == P("x"));

  MagnusContext pure = make_magnus_context(P("x^2*y^4"), P("x^3*y^6"), {1, 1});
  auto p = frac_power_expand(pure, make_rational(3, 2), 3);
  CHECK(p[0].evaluate_monomial(pure.H) == P("x^3*y^6"));
  for (int k = 1; k <= 3; ++k) CHECK(p[k].is_zero());

  auto one = frac_power_expand(ctx, 1, 3);
  CHECK(one[0].evaluate_monomial(ctx.H) == P("y^2"));
  CHECK(one[2].evaluate_monomial(ctx.H) == P("x"));
  CHECK(one[3].is_zero());

  CHECK_THROWS(frac_power_expand(ctx, make_rational(1, 3), 2));
}

TEST_CASE("expansion coefficients are w-homogeneous") {
  MagnusContext ctx = make_magnus_context(P("(x*y+x)^2+y+x"), P("(x*y+x)^3"), {1, 1});
  for (long l = 1; l <= 4; ++l) {
    Rational A = make_rational(l, ctx.r);
    for (long k = 0; k <= 4; ++k) {
      PuiseuxPoly v = frac_power_coefficient(ctx, A, k).evaluate_monomial(ctx.H);
      if (v.is_zero()) continue;
      CHECK(v == oracle::top_slice(v, 1, 1));
      CHECK(*w_deg(v, ctx.w) == A * ctx.d - k);
    }
  }
}

TEST_CASE("Magnus solver examples") {
  MagnusReport a = magnus_solve(P("y+x^2"), P("x"), {1, 1});
  CHECK(a.d == 2);
  CHECK(a.e == 1);
  CHECK(a.r == 2);
  CHECK(a.H == P("x"));
  CHECK(a.c == std::vector<Rational>{1});
  CHECK(a.residuals_zero());

  MagnusReport b = magnus_solve(P("x+y^2"), P("y"), {0, 1});
  CHECK(b.H == P("y"));
  CHECK(b.c == std::vector<Rational>{1, 0});
  CHECK(b.residuals_zero());

  MagnusReport c = magnus_solve(P("(x*y+1)^2"), P("(x*y+1)^3"), {1, 1});
  CHECK(c.r == 2);
  CHECK(c.H == P("x*y"));
  CHECK(c.c.front() == 1);
  CHECK(c.residuals_zero());

  MagnusReport empty = magnus_solve(P("x"), P("y"), {1, 1});
  CHECK(empty.c.empty());
  CHECK(empty.residuals_zero());

  CHECK_THROWS(magnus_solve(P("x+y^2"), P("x*y"), {0, 1}));
  CHECK_THROWS(magnus_solve(P("x+x^2"), P("y"), {0, 1}));
}

TEST_CASE("Magnus solver on automorphism images") {
  testgen::Rng rng(52);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    testgen::Pair p{P("x"), P("y")};
    for (int k = rng.range(1, 3); k > 0; --k) p = testgen::random_elementary(rng, p);
    if (testgen::total_degree(p.F) > 6 || testgen::total_degree(p.G) > 6) continue;
    if (*w_deg(p.F, {1, 1}) <= 0) continue;
    MagnusReport r = magnus_solve(p.F, p.G, {1, 1});
    CHECK(r.residuals_zero());
    if (!r.c.empty()) CHECK(r.c.front() != 0);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("extended formula") {
  MagnusReport a = magnus_extended(P("x+y^2"), P("y"));
  REQUIRE(a.lambda);
  CHECK(*a.lambda == make_rational(1, 2));
  CHECK(a.c == std::vector<Rational>{1, 0});
  CHECK(a.extended_ok);

  MagnusReport b = magnus_extended(P("(x*y^2+y)^2"), P("(x*y^2+y)^3"));
  REQUIRE(b.lambda);
  CHECK(*b.lambda == 0);
  CHECK(b.extended_ok);

  CHECK_THROWS(magnus_extended(P("x*y+x"), P("x*y+x")));
  CHECK_THROWS(magnus_extended(P("x*y+y"), P("x*y+y")));
}

TEST_CASE("one-variable rational power") {
  CHECK(onevar_rational_power({1, 1}, {}, 2, 3, 6) == std::vector<Rational>{1, 3, 3, 1, 0, 0, 0});

  auto R = onevar_rational_power({1, 1}, {0, 0, 0, 1}, 2, 3, 20);
  CHECK(R == oracle::rational_power({1, 1}, {0, 0, 0, 1}, 2, 3, 20));
  bool found = false;
  for (long mu = 4; mu <= 20; ++mu) found = found || R[static_cast<std::size_t>(mu)] != 0;
  CHECK(found);

  auto raw = onevar_rational_power({1}, {0, 1}, 2, 3, 5);
  for (long k = 0; k <= 5; ++k) CHECK(raw[static_cast<std::size_t>(k)] == binomial(make_rational(3, 2), k));

  CHECK_THROWS(onevar_rational_power({0, 1}, {}, 2, 3, 6));
}
