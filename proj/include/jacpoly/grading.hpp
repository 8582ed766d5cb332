#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "jacpoly/poly.hpp"
#include "jacpoly/polygeom.hpp"

namespace jacpoly {

// Primitive weight vector: gcd(|u|,|v|) = 1 and u > 0 or v > 0.
struct Direction {
  long u = 1;
  long v = 0;

  bool operator==(const Direction& o) const { return u == o.u && v == o.v; }
  std::string str() const { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }
};

Direction make_direction(long u, long v);
// Primitive integer direction along a rational vector.
Direction primitive_direction(const RatPoint& vec);

Rational w_weight(const Direction& w, const ExponentPair& e);
Rational w_weight(const Direction& w, const RatPoint& p);

// Maximal weight over the support; nullopt stands for -infinity.
std::optional<Rational> w_deg(const PuiseuxPoly& f, const Direction& w);

PuiseuxPoly leading_form(const PuiseuxPoly& f, const Direction& w);

struct HomogeneousDecomposition {
  Direction direction;
  std::map<Rational, PuiseuxPoly> parts;

  PuiseuxPoly part(const Rational& deg) const;
  PuiseuxPoly sum() const;
};

HomogeneousDecomposition decompose(const PuiseuxPoly& f, const Direction& w);

// Counterclockwise order inside the half-open half circle starting at anchor.
std::strong_ordering direction_cmp(const Direction& a, const Direction& b, const Direction& anchor);

}  // namespace jacpoly
