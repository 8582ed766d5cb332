#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "jacpoly/genfactory.hpp"
#include "oracles.hpp"

using namespace jacpoly;

namespace {

PuiseuxPoly P(const char* s) { return parse_poly(s); }

const char* kF = "(x+1)^2*(y+1)^4+(x+1)*(y+1)";
const char* kU = "(x^2*y+x^2+y)^12+(x^2*y+x^2+y)^4+1";

bool avoids(const PuiseuxPoly& f, const ConvexPolygon& region) {
  for (const auto& p : support(f))
    if (region.contains(p)) return false;
  return true;
}

const ClauseResult& find_clause(const InnerVertexReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return c;
  throw std::out_of_range("no clause " + name);
}

}  // namespace

TEST_CASE("Q tuples") {
  CHECK_NOTHROW(make_qtuple(2, 3, 2, 4));
  CHECK_THROWS_AS(make_qtuple(2, 4, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_qtuple(3, 2, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_qtuple(2, 3, 3, 4), std::invalid_argument);
}

TEST_CASE("corner order") {
  auto z = corner_order(2, 4, 2);
  CHECK(z.front() == RatPoint(1, 2));
  CHECK(z.size() == 6);
  CHECK(corner_order(2, 2, 2) == std::vector<RatPoint>{{1, 1}, {0, 1}, {1, 0}, {0, 0}});
  CHECK_THROWS_AS(corner_order(3, 4, 2), std::invalid_argument);

  // Strictly decreasing x + sqrt(2) y, compared in floating point on a small grid.
  auto big = corner_order(12, 18, 2);
  std::set<std::pair<long, long>> seen;
  for (std::size_t i = 0; i < big.size(); ++i) {
    seen.insert({to_long(big[i].x), to_long(big[i].y)});
    if (i + 1 < big.size()) {
      double a = big[i].x.get_d() + std::sqrt(2.0) * big[i].y.get_d();
      double b = big[i + 1].x.get_d() + std::sqrt(2.0) * big[i + 1].y.get_d();
      CHECK(a > b);
    }
  }
  CHECK(seen.size() == 7 * 10);
}

TEST_CASE("pre-generator examples") {
  CHECK(pre_generator(P(kF), 2) == P("(x+1)*(y+1)^2"));
  CHECK(pre_generator(P("x^6*y^9"), 3) == P("x^2*y^3"));
  CHECK(pre_generator(P(kU), 2) == P("(x^2*y+x^2+y)^6"));
  CHECK_THROWS_AS(pre_generator(P("2*x^2*y^4"), 2), std::invalid_argument);
  CHECK_THROWS_AS(pre_generator(P("x^3*y^4"), 2), std::invalid_argument);
}

TEST_CASE("inner polynomial examples") {
  CHECK(inner_poly(P(kF), 2) == P("(x+1)*(y+1)"));
  CHECK(inner_poly(P("x^2*y^4"), 2).is_zero());
  CHECK(inner_poly(P(kU), 2) == P("(x^2*y+x^2+y)^4+1"));
}

TEST_CASE("pre-generator agrees with simultaneous solving") {
  testgen::Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    long a = rng.range(2, 3);
    long m = a * rng.range(1, 6 / a), n = a * rng.range(1, 6 / a);
    PuiseuxPoly F = testgen::random_rect_poly(rng, m, n, 0.5);
    auto expected = oracle::jacobi_pregen(F, a, m, n);
    REQUIRE(expected);
    PuiseuxPoly Q = pre_generator(F, a);
    CHECK(Q == *expected);
    PuiseuxPoly inner = inner_poly(F, a);
    CHECK(inner == F - pow(Q, static_cast<unsigned long>(a)));
    CHECK(avoids(inner, n_prime_regions(a, m, n).second));
    CHECK(polygon_subset(newton_polygon(inner, true), newton_polygon(F, true)));
  }
}

TEST_CASE("univariate decomposition examples") {
  Decomposition u = decompose_univariate(P(kU));
  CHECK(u.W == P("x^2*y+x^2+y"));
  CHECK(u.alpha.ascending() == std::vector<Rational>{1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1});

  Decomposition c = decompose_univariate(P("(x*y+1)^3+(x*y+1)+1"));
  CHECK(c.W == P("x*y+1"));
  CHECK(c.alpha.ascending() == std::vector<Rational>{1, 1, 0, 1});

  Decomposition p = decompose_univariate(P("x^2*y+y+1"));
  CHECK(p.W == P("x^2*y+y+1"));
  CHECK(p.alpha.degree == 1);
}

TEST_CASE("decomposition round trip") {
  testgen::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    long M = rng.range(1, 2), N = rng.range(1, 2);
    PuiseuxPoly W = testgen::random_rect_poly(rng, M, N, 0.6);
    W -= PuiseuxPoly::constant(W.coefficient({0, 0}));
    long k = rng.range(2, 4);
    Tschirnhausen alpha{k, {}};
    for (long j = 0; j + 2 <= k; ++j) alpha.coeffs.push_back(rng.sparse(0.6));
    PuiseuxPoly f = compose(alpha.ascending(), W);
    Decomposition d = decompose_univariate(f);
    CHECK(d.scale * compose(d.alpha.ascending(), d.W) == f);
    CHECK(d.alpha.degree % k == 0);

    // Pinning W to the returned one reproduces the same alpha.
    auto again = try_decompose_at(compose(d.alpha.ascending(), d.W), d.alpha.degree);
    if (d.alpha.degree > 1) {
      REQUIRE(again);
      CHECK(again->W == d.W);
      CHECK(again->alpha == d.alpha);
    }
  }
}

TEST_CASE("generator examples") {
  GeneratorResult g = f_generator(P(kF), make_qtuple(2, 3, 2, 4));
  CHECK(g.delta == 1);
  CHECK(g.WF == P("(x+1)*(y+1)^2"));
  CHECK(g.e_list == std::vector<Rational>{1});
  CHECK(g.Z == P("x*y+x+y"));

  GeneratorResult u = f_generator(P(kU), make_qtuple(2, 3, 24, 12));
  CHECK(u.delta == 6);
  CHECK(u.WF == P("x^2*y+x^2+y"));
  CHECK(u.e_list == std::vector<Rational>{1, 0, 0, 0, 1, 0});
  CHECK(u.Z.is_zero());
  CHECK(u.structural_ok);

  GeneratorResult t = f_generator(P("x^2*y^4+1"), make_qtuple(2, 3, 2, 4));
  CHECK(t.Q == P("x*y^2"));
  CHECK(t.delta == 1);
  CHECK(t.e_list == std::vector<Rational>{1});
  CHECK(t.Z.is_zero());

  CHECK_THROWS_AS(f_generator(P("x^3*y^4"), make_qtuple(2, 3, 2, 4)), std::invalid_argument);
}

TEST_CASE("generator invariants on random inputs") {
  testgen::Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    long a = rng.range(2, 3);
    long b = a + 1;
    long m = a * rng.range(1, 2), n = a * rng.range(1, 3);
    PuiseuxPoly F = testgen::random_rect_poly(rng, m, n, 0.4);
    GeneratorResult g = f_generator(F, make_qtuple(a, b, m, n));
    PuiseuxPoly rebuilt = pow(g.Q, static_cast<unsigned long>(a)) + g.Z;
    for (std::size_t j = 0; j < g.e_list.size(); ++j) rebuilt += g.e_list[j] * pow(g.WF, j);
    CHECK(rebuilt == F);
    long ad = a * g.delta;
    for (long j = 0; j < (a - 1) * g.delta; ++j) CHECK(g.Z.coefficient({j * m / ad, j * n / ad}) == 0);
    CHECK(g.WF.coefficient({m / ad, n / ad}) == 1);
    CHECK(compose(g.beta.ascending(), g.WF) == g.Q);
  }
}

TEST_CASE("inner vertex report") {
  InnerVertexReport r = inner_vertex_report(P(kF), make_qtuple(2, 3, 2, 4));
  CHECK(r.status == "outside region");
  REQUIRE(r.Z_en);
  CHECK(*r.Z_en == RatPoint(1, 1));
  CHECK(*r.Z_ne == RatPoint(1, 1));
  CHECK_FALSE(find_clause(r, "Z vertex in region").pass);
  CHECK(find_clause(r, "EN equals NE").pass);

  InnerVertexReport z = inner_vertex_report(P("x^2*y^4+1"), make_qtuple(2, 3, 2, 4));
  CHECK(z.status == "degenerate: Z=0, theorem satisfied");

  InnerVertexReport s = inner_vertex_report(P("(x^2+1)^2*(y^2+1)^2+x^2*y+x*y^2"), make_qtuple(2, 3, 4, 4));
  CHECK(s.gen.Z == P("x^2*y+x*y^2"));
  CHECK(*s.Z_en == RatPoint(2, 1));
  CHECK(*s.Z_ne == RatPoint(1, 2));
  CHECK_FALSE(find_clause(s, "EN equals NE").pass);
}

TEST_CASE("T membership certificate") {
  TMembershipReport a = certify_T_membership(P("x^2*y^4+x"), 2, 4, 2, 3);
  CHECK(a.bullets[0] == BulletStatus::Pass);
  CHECK(a.bullets[1] == BulletStatus::Pass);
  CHECK(a.bullets[2] == BulletStatus::Pass);

  TMembershipReport b = certify_T_membership(P(kF), 2, 4, 2, 3);
  CHECK(b.bullets[2] == BulletStatus::Fail);
  CHECK_FALSE(b.member());

  TMembershipReport c = certify_T_membership(P("x^2*y^4"), 2, 4, 2, 3);
  CHECK(c.bullets[3] == BulletStatus::InnerVanishes);
  CHECK_FALSE(c.member());
}

TEST_CASE("Tschirnhausen normalization") {
  NormalizedPair p = tschirnhausen_normalize({1, 2, 1}, P("x*y"));
  CHECK(p.alpha.ascending() == std::vector<Rational>{0, 0, 1});
  CHECK(p.W == P("x*y+1"));

  NormalizedPair q = tschirnhausen_normalize({5, 3, 0, 1}, P("x+y"));
  CHECK(q.alpha.ascending() == std::vector<Rational>{5, 3, 0, 1});
  CHECK(q.W == P("x+y"));

  NormalizedPair r = tschirnhausen_normalize({1, 3, 3, 1}, P("y"));
  CHECK(r.alpha.ascending() == std::vector<Rational>{0, 0, 0, 1});
  CHECK(r.W == P("y+1"));

  CHECK_THROWS_AS(tschirnhausen_normalize({1, 2}, P("x")), std::invalid_argument);

  testgen::Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> alpha = testgen::random_uni(rng, 0, rng.range(2, 4));
    alpha.back() = 1;
    PuiseuxPoly W = testgen::random_poly(rng, 2, 2, 0.6);
    NormalizedPair n = tschirnhausen_normalize(alpha, W);
    CHECK(compose(n.alpha.ascending(), n.W) == compose(alpha, W));
    CHECK(n.alpha.ascending()[static_cast<std::size_t>(n.alpha.degree - 1)] == 0);
  }
}
