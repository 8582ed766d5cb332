#include "jacpoly/polygeom.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacpoly {

RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {Rational(a.x + b.x), Rational(a.y + b.y)}; }
RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {Rational(a.x - b.x), Rational(a.y - b.y)}; }
RatPoint operator*(const Rational& s, const RatPoint& p) { return {Rational(s * p.x), Rational(s * p.y)}; }

Rational cross(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }

std::string to_string(const RatPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

namespace {

Rational turn(const RatPoint& o, const RatPoint& a, const RatPoint& b) { return cross(a - o, b - o); }

bool on_segment(const RatPoint& a, const RatPoint& b, const RatPoint& p) {
  if (turn(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool ConvexPolygon::contains(const RatPoint& p) const {
  const auto& v = vertices;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == p;
  if (v.size() == 2) return on_segment(v[0], v[1], p);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (turn(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  return true;
}

const RatPoint& ConvexPolygon::prev(std::size_t i) const {
  return vertices[(i + vertices.size() - 1) % vertices.size()];
}

const RatPoint& ConvexPolygon::next(std::size_t i) const { return vertices[(i + 1) % vertices.size()]; }

std::optional<std::size_t> ConvexPolygon::index_of(const RatPoint& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == p) return i;
  return std::nullopt;
}

ConvexPolygon convex_hull(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts};
  // Monotone chain; strict turns drop collinear points.
  std::vector<RatPoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return {h};
}

ConvexPolygon scaled(const ConvexPolygon& p, const Rational& s) {
  std::vector<RatPoint> v;
  for (const auto& q : p.vertices) v.push_back(s * q);
  return convex_hull(v);
}

ConvexPolygon translated(const ConvexPolygon& p, const RatPoint& t) {
  ConvexPolygon out = p;
  for (auto& q : out.vertices) q = q + t;
  return out;
}

ConvexPolygon rect(const Rational& m, const Rational& n) {
  return convex_hull({{Rational(0), Rational(0)}, {m, Rational(0)}, {m, n}, {Rational(0), n}});
}

bool polygon_subset(const ConvexPolygon& inner, const ConvexPolygon& outer) {
  for (const auto& v : inner.vertices)
    if (!outer.contains(v)) return false;
  return true;
}

std::vector<RatPoint> support(const PuiseuxPoly& f) {
  std::vector<RatPoint> out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e.x, e.y);
  std::sort(out.begin(), out.end());
  return out;
}

ConvexPolygon newton_polygon(const PuiseuxPoly& f, bool augmented) {
  if (f.is_zero() && !augmented) throw std::domain_error("Newton polygon of the zero polynomial");
  auto pts = support(f);
  if (augmented) pts.emplace_back(0, 0);
  return convex_hull(std::move(pts));
}

RatPoint en_vertex(const ConvexPolygon& p) {
  if (p.empty()) throw std::domain_error("EN vertex of an empty polygon");
  RatPoint best = p.vertices[0];
  for (const auto& v : p.vertices)
    if (v.x > best.x || (v.x == best.x && v.y > best.y)) best = v;
  return best;
}

RatPoint ne_vertex(const ConvexPolygon& p) {
  if (p.empty()) throw std::domain_error("NE vertex of an empty polygon");
  RatPoint best = p.vertices[0];
  for (const auto& v : p.vertices)
    if (v.y > best.y || (v.y == best.y && v.x > best.x)) best = v;
  return best;
}

RectMembership rect_membership(const PuiseuxPoly& f, long m, long n) {
  ConvexPolygon n0 = newton_polygon(f, true);
  ConvexPolygon r = rect(Rational(m), Rational(n));
  Rational corner = f.coefficient({m, n});
  if (corner == 0) return RectMembership::Neither;
  if (n0 == r && corner == 1) return RectMembership::InR;
  if (polygon_subset(n0, r)) return RectMembership::InRbar;
  return RectMembership::Neither;
}

std::string to_string(RectMembership r) {
  switch (r) {
    case RectMembership::InR: return "R";
    case RectMembership::InRbar: return "Rbar";
    case RectMembership::Neither: return "neither";
  }
  return "?";
}

std::pair<ConvexPolygon, ConvexPolygon> n_prime_regions(long a, long m, long n) {
  if (a <= 0 || m % a != 0 || n % a != 0)
    throw std::invalid_argument("n_prime_regions: a must divide m and n");
  ConvexPolygon np = rect(Rational(m / a), Rational(n / a));
  ConvexPolygon npp = translated(np, {(a - 1) * (m / a), (a - 1) * (n / a)});
  return {np, npp};
}

void check_q_tuple(long a, long b, long m, long n) {
  if (a < 2 || a >= b) throw std::invalid_argument("need 2 <= a < b");
  if (m <= 0 || n <= 0) throw std::invalid_argument("need m, n > 0");
  if (m % a != 0 || n % a != 0) throw std::invalid_argument("need a | m and a | n");
  if (gcd(a, b) != 1) throw std::invalid_argument("need gcd(a, b) = 1");
}

RegionR make_region(long a, long b, long m, long n) {
  check_q_tuple(a, b, m, n);
  RegionR r;
  r.a = a;
  r.b = b;
  r.m = m;
  r.n = n;
  Rational c = make_rational(a, a + b);
  r.C = {c, c};
  r.slope_m = (Rational(n) - c) / (Rational(m) - c);
  return r;
}

bool region_R_contains(const RegionR& r, const RatPoint& p) {
  Rational top = make_rational((r.a - 1) * r.n, r.a);
  if (p.y < 0 || p.y >= top) return false;
  const Rational& c = r.C.x;
  if (r.slope_m * (p.x - c) + c > p.y) return false;
  return Rational(r.m) * p.y <= Rational(r.n) * p.x;
}

std::optional<std::pair<Rational, Rational>> region_width_at(const RegionR& r, const Rational& y) {
  Rational top = make_rational((r.a - 1) * r.n, r.a);
  if (y < 0 || y >= top) return std::nullopt;
  const Rational& c = r.C.x;
  Rational lo = Rational(r.m) * y / Rational(r.n);
  Rational hi = (y - c) / r.slope_m + c;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<RatPoint> lattice_points_in_R(const RegionR& r) {
  std::vector<RatPoint> out;
  Rational top = make_rational((r.a - 1) * r.n, r.a);
  for (Integer y = 0; y < top; ++y) {
    auto w = region_width_at(r, Rational(y));
    if (!w) continue;
    for (Integer x = ceil_of(w->first); x <= floor_of(w->second); ++x) {
      RatPoint p{Rational(x), Rational(y)};
      if (region_R_contains(r, p)) out.push_back(p);
    }
  }
  return out;
}

bool in_L_v(long a, long b, const RatPoint& v, const RatPoint& p) {
  Rational c = make_rational(a, a + b);
  if (v.x <= c || v.y <= 0) throw std::invalid_argument("in_L_v: need v.x > a/(a+b) and v.y > 0");
  Rational slope = (v.y - c) / (v.x - c);
  if (p.x < 0 || p.y <= 0) return false;
  return p.y < slope * (p.x - c) + c;
}

Rational shoelace_area(const ConvexPolygon& p) {
  Rational twice = 0;
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return abs(twice) / 2;
}

PickResult pick_area(const ConvexPolygon& p) {
  for (const auto& v : p.vertices)
    if (!is_integer(v.x) || !is_integer(v.y)) throw std::invalid_argument("pick_area: non-lattice vertex");
  PickResult res;
  res.area = shoelace_area(p);
  const auto& v = p.vertices;
  if (v.empty()) return {Rational(0), 0, 0};
  if (v.size() == 1) return {Rational(0), 0, 1};
  Integer boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatPoint d = v[(i + 1) % v.size()] - v[i];
    boundary += gcd(Integer(abs(d.x.get_num())), Integer(abs(d.y.get_num())));
  }
  if (v.size() == 2) {
    res.boundary = boundary / 2 + 1;
    res.interior = 0;
    return res;
  }
  res.boundary = boundary;
  // Count interior points directly and compare with Pick's formula.
  Rational xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& q : v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  Integer interior = 0;
  for (Integer x = xmin.get_num(); x <= xmax.get_num(); ++x)
    for (Integer y = ymin.get_num(); y <= ymax.get_num(); ++y) {
      RatPoint q{Rational(x), Rational(y)};
      bool strict = true;
      for (std::size_t i = 0; i < v.size() && strict; ++i)
        if (turn(v[i], v[(i + 1) % v.size()], q) <= 0) strict = false;
      if (strict) ++interior;
    }
  res.interior = interior;
  if (res.area != Rational(interior) + Rational(boundary) / 2 - 1)
    throw std::logic_error("pick_area: shoelace and lattice count disagree");
  return res;
}

std::optional<Rational> similarity_check(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.vertices.size() != q.vertices.size() || p.empty()) return std::nullopt;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < p.vertices.size() && !ratio; ++i) {
    if (p.vertices[i].x != 0) ratio = q.vertices[i].x / p.vertices[i].x;
    else if (p.vertices[i].y != 0) ratio = q.vertices[i].y / p.vertices[i].y;
  }
  if (!ratio) return p == q ? std::optional<Rational>(1) : std::nullopt;
  if (*ratio <= 0) return std::nullopt;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    if (*ratio * p.vertices[i] != q.vertices[i]) return std::nullopt;
  return ratio;
}

}  // namespace jacpoly
