#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacpoly/poly.hpp"

namespace jacpoly {

struct RatPoint {
  Rational x;
  Rational y;

  RatPoint() = default;
  RatPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  RatPoint(long px, long py) : x(px), y(py) {}

  bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const RatPoint& o) const { return !(*this == o); }
  bool operator<(const RatPoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

RatPoint operator+(const RatPoint& a, const RatPoint& b);
RatPoint operator-(const RatPoint& a, const RatPoint& b);
RatPoint operator*(const Rational& s, const RatPoint& p);
// z-component of a x b.
Rational cross(const RatPoint& a, const RatPoint& b);
std::string to_string(const RatPoint& p);

// Counterclockwise vertices starting from the lexicographically smallest.
// One vertex is a point, two are a segment.
struct ConvexPolygon {
  std::vector<RatPoint> vertices;

  bool empty() const { return vertices.empty(); }
  bool operator==(const ConvexPolygon& o) const { return vertices == o.vertices; }
  // Boundary included.
  bool contains(const RatPoint& p) const;
  // Vertex preceding index i in counterclockwise order.
  const RatPoint& prev(std::size_t i) const;
  const RatPoint& next(std::size_t i) const;
  std::optional<std::size_t> index_of(const RatPoint& p) const;
};

ConvexPolygon convex_hull(std::vector<RatPoint> pts);
ConvexPolygon scaled(const ConvexPolygon& p, const Rational& s);
ConvexPolygon translated(const ConvexPolygon& p, const RatPoint& t);
ConvexPolygon rect(const Rational& m, const Rational& n);
// Every vertex of inner lies in outer.
bool polygon_subset(const ConvexPolygon& inner, const ConvexPolygon& outer);

std::vector<RatPoint> support(const PuiseuxPoly& f);
// N(f) or, with augmented, N0(f). N(0) throws.
ConvexPolygon newton_polygon(const PuiseuxPoly& f, bool augmented);

// Rightmost vertices, then the highest of them.
RatPoint en_vertex(const ConvexPolygon& p);
// Highest vertices, then the rightmost of them.
RatPoint ne_vertex(const ConvexPolygon& p);

enum class RectMembership { InR, InRbar, Neither };
RectMembership rect_membership(const PuiseuxPoly& f, long m, long n);
std::string to_string(RectMembership r);

// Corner rectangle Rect_{m/a,n/a} and its translate to the far corner.
std::pair<ConvexPolygon, ConvexPolygon> n_prime_regions(long a, long m, long n);

// (a, b, m, n) with a | m, a | n, gcd(a, b) = 1 and 2 <= a < b.
void check_q_tuple(long a, long b, long m, long n);

struct RegionR {
  long a = 0, b = 0, m = 0, n = 0;
  RatPoint C;
  Rational slope_m;
};

RegionR make_region(long a, long b, long m, long n);
bool region_R_contains(const RegionR& r, const RatPoint& p);
// Sorted by y, then x.
std::vector<RatPoint> lattice_points_in_R(const RegionR& r);
// Exact x-interval of the region at height y, if nonempty.
std::optional<std::pair<Rational, Rational>> region_width_at(const RegionR& r, const Rational& y);

// First-quadrant points strictly right of the line through v and C.
bool in_L_v(long a, long b, const RatPoint& v, const RatPoint& p);

struct PickResult {
  Rational area;
  Integer interior;
  Integer boundary;
};
PickResult pick_area(const ConvexPolygon& p);
Rational shoelace_area(const ConvexPolygon& p);

// Ratio r with q = r * p, if any.
std::optional<Rational> similarity_check(const ConvexPolygon& p, const ConvexPolygon& q);

// SVG figures.
struct SvgItem {
  enum class Kind { Polygon, Point, Line };
  Kind kind = Kind::Polygon;
  std::vector<RatPoint> points;
  std::string label;
  std::string color = "black";
  int frame = 0;
};
std::string render_svg(const std::vector<SvgItem>& items);

}  // namespace jacpoly
