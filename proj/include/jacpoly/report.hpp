#pragma once

#include "json.hpp"

#include "jacpoly/genfactory.hpp"
#include "jacpoly/magnus.hpp"
#include "jacpoly/polygeom.hpp"
#include "jacpoly/walker.hpp"

namespace jacpoly {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" strings, points are [x, y] pairs of such strings.
Json to_json(const Rational& q);
Json to_json(const RatPoint& p);
Json to_json(const ConvexPolygon& p);
Json to_json(const PuiseuxPoly& f);
Json to_json(const Direction& w);
Json to_json(const Tschirnhausen& t);

// Each report carries "schema": "jacpoly.<command>/1".
Json polygon_report(const PuiseuxPoly& f, std::optional<std::pair<long, long>> mn);
Json pregen_report(const PuiseuxPoly& F, long a, const PuiseuxPoly& Q, const PuiseuxPoly& inner);
Json generator_report(const InnerVertexReport& r);
Json magnus_report(const MagnusReport& r, bool extended);
Json walk_report(const WalkTrace& t);
Json region_report(const RegionR& r, bool list);
Json certify_report(const PuiseuxPoly& f, long m, long n, long a, const TMembershipReport& r);

}  // namespace jacpoly
