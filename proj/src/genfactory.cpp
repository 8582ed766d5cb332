#include "jacpoly/genfactory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jacpoly/grading.hpp"

namespace jacpoly {

QTuple make_qtuple(long a, long b, long m, long n) {
  check_q_tuple(a, b, m, n);
  return {a, b, m, n};
}

std::vector<Rational> Tschirnhausen::ascending() const {
  std::vector<Rational> v = coeffs;
  v.resize(static_cast<std::size_t>(degree), Rational(0));
  v.push_back(1);
  return v;
}

std::string Tschirnhausen::str() const {
  auto v = ascending();
  std::ostringstream os;
  bool first = true;
  for (long k = degree; k >= 0; --k) {
    const Rational& c = v[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return first ? "0" : os.str();
}

namespace {

Tschirnhausen from_ascending(const std::vector<Rational>& v) {
  long k = static_cast<long>(v.size()) - 1;
  if (k < 1 || v.back() != 1 || v[static_cast<std::size_t>(k - 1)] != 0)
    throw std::logic_error("polynomial is not in the Tschirnhausen set");
  Tschirnhausen t;
  t.degree = k;
  if (k >= 2) t.coeffs.assign(v.begin(), v.begin() + (k - 1));
  return t;
}

using Univariate = std::vector<Rational>;

Univariate uni_mul(const Univariate& a, const Univariate& b) {
  Univariate out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// outer(inner(z)) by Horner.
Univariate uni_compose(const Univariate& outer, const Univariate& inner) {
  Univariate acc{outer.back()};
  for (std::size_t k = outer.size() - 1; k-- > 0;) {
    acc = uni_mul(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

struct Box {
  Rational M;
  Rational N;
};

Box bounding_corner(const PuiseuxPoly& f) {
  Box b{Rational(0), Rational(0)};
  for (const auto& [e, c] : f.terms()) {
    b.M = std::max(b.M, e.x);
    b.N = std::max(b.N, e.y);
  }
  return b;
}

bool inside_box(const PuiseuxPoly& f, const Box& b) {
  for (const auto& [e, c] : f.terms())
    if (e.x < 0 || e.y < 0 || e.x > b.M || e.y > b.N) return false;
  return true;
}

std::vector<PuiseuxPoly> powers(const PuiseuxPoly& P, long upto) {
  std::vector<PuiseuxPoly> out{PuiseuxPoly::constant(1)};
  for (long j = 1; j <= upto; ++j) out.push_back(out.back() * P);
  return out;
}

}  // namespace

std::optional<Decomposition> try_decompose_at(const PuiseuxPoly& f, long delta) {
  if (delta < 1) throw std::invalid_argument("try_decompose_at: degree must be positive");
  Box box = bounding_corner(f);
  if (!is_integer(box.N) || !inside_box(f, box) || f.coefficient({box.M, box.N}) != 1)
    throw std::invalid_argument("try_decompose_at: f needs N0 in Rect_{M,N} with corner coefficient 1");
  long N = to_long(box.N);
  if (N % delta != 0) return std::nullopt;
  if (f.tag().kind == RingTag::Kind::Plain && !is_integer(box.M / delta)) return std::nullopt;
  if (delta == 1) return Decomposition{f, Tschirnhausen{}, 1};

  PuiseuxPoly P = approximate_root(f, delta, box.M, N);
  auto pw = powers(P, delta);
  PuiseuxPoly R = f - pw[static_cast<std::size_t>(delta)];
  std::vector<Rational> e(static_cast<std::size_t>(delta - 1), Rational(0));
  for (long j = delta - 2; j >= 0; --j) {
    ExponentPair at(box.M * j / delta, box.N * j / delta);
    Rational c = R.coefficient(at);
    if (c == 0) continue;
    e[static_cast<std::size_t>(j)] = c;
    R -= c * pw[static_cast<std::size_t>(j)];
  }
  if (!R.is_zero()) return std::nullopt;
  Tschirnhausen alpha;
  alpha.degree = delta;
  alpha.coeffs = std::move(e);
  return Decomposition{P, alpha, 1};
}

Decomposition decompose_univariate(const PuiseuxPoly& f) {
  if (f.is_zero() || f.is_constant()) throw std::invalid_argument("decompose_univariate: f must be nonconstant");
  Box box = bounding_corner(f);
  Rational corner = f.coefficient({box.M, box.N});
  if (corner == 0 || !is_integer(box.N) || !inside_box(f, box)) return {f, Tschirnhausen{}, 1};

  PuiseuxPoly g = f * (1 / corner);
  long top = std::max(to_long(box.N), to_long(Rational(ceil_of(box.M))));
  for (long delta = top; delta >= 2; --delta) {
    auto step = try_decompose_at(g, delta);
    if (!step) continue;
    Decomposition inner = decompose_univariate(step->W);
    Decomposition out;
    out.W = inner.W;
    out.alpha = from_ascending(uni_compose(step->alpha.ascending(), inner.alpha.ascending()));
    out.scale = corner;
    return out;
  }
  return {g, Tschirnhausen{}, corner};
}

GeneratorResult f_generator(const PuiseuxPoly& F, const QTuple& qt) {
  check_q_tuple(qt.a, qt.b, qt.m, qt.n);
  // The closure with corner coefficient 1 is enough for every step below.
  if (rect_membership(F, qt.m, qt.n) == RectMembership::Neither || F.coefficient({qt.m, qt.n}) != 1)
    throw std::invalid_argument("f_generator: need N0(F) inside Rect_{m,n} and [x^m y^n]F = 1");
  GeneratorResult res;
  res.qt = qt;
  res.Q = pre_generator(F, qt.a);
  res.inner = F - pow(res.Q, static_cast<unsigned long>(qt.a));

  long g = gcd(qt.m / qt.a, qt.n / qt.a);
  std::vector<long> successes;
  std::optional<Decomposition> chosen;
  for (long delta = g; delta >= 1; --delta) {
    if (g % delta != 0) continue;
    auto d = try_decompose_at(res.Q, delta);
    if (!d) continue;
    successes.push_back(delta);
    if (!chosen) {
      chosen = d;
      res.delta = delta;
    }
  }
  for (long d : successes)
    if (res.delta % d != 0) res.multiple_delta = true;

  res.beta = chosen->alpha;
  res.WF = chosen->W;
  long ad = qt.a * res.delta;
  res.structural_ok = newton_polygon(res.WF, true) == rect(Rational(qt.m / ad), Rational(qt.n / ad));

  long count = (qt.a - 1) * res.delta;
  res.e_list.assign(static_cast<std::size_t>(count), Rational(0));
  auto pw = powers(res.WF, count - 1);
  res.Z = res.inner;
  for (long j = count - 1; j >= 0; --j) {
    ExponentPair at(j * qt.m / ad, j * qt.n / ad);
    Rational c = res.Z.coefficient(at);
    if (c == 0) continue;
    res.e_list[static_cast<std::size_t>(j)] = c;
    res.Z -= c * pw[static_cast<std::size_t>(j)];
  }
  return res;
}

namespace {

ClauseResult clause(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, std::move(detail)};
}

// The region for (a, b, m, n) without requiring a | m.
RegionR loose_region(long a, long b, long m, long n) {
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

}  // namespace

InnerVertexReport inner_vertex_report(const PuiseuxPoly& F, const QTuple& qt) {
  InnerVertexReport rep;
  QTuple q = qt;
  PuiseuxPoly f = F;
  if (qt.m > qt.n) {
    rep.mirrored = true;
    std::swap(q.m, q.n);
    f = swap_xy(F);
  }
  rep.gen = f_generator(f, q);
  RegionR region = make_region(q.a, q.b, q.m, q.n);

  if (!rep.gen.inner.is_zero()) {
    ConvexPolygon ni = newton_polygon(rep.gen.inner, true);
    rep.inner_en = en_vertex(ni);
    rep.inner_ne = ne_vertex(ni);
  }
  if (rep.gen.Z.is_zero()) {
    rep.status = "degenerate: Z=0, theorem satisfied";
    return rep;
  }
  ConvexPolygon nz = newton_polygon(rep.gen.Z, true);
  rep.Z_en = en_vertex(nz);
  rep.Z_ne = ne_vertex(nz);
  const RatPoint& v = *rep.Z_en;

  bool in_region = region_R_contains(region, v);
  rep.clauses.push_back(clause("Z vertex in region", in_region, to_string(v)));
  if (rep.inner_en)
    rep.clauses.push_back(
        clause("inner vertex in region", region_R_contains(region, *rep.inner_en), to_string(*rep.inner_en)));
  rep.clauses.push_back(clause("EN equals NE", *rep.Z_en == *rep.Z_ne,
                               to_string(*rep.Z_en) + " vs " + to_string(*rep.Z_ne)));
  rep.clauses.push_back(clause("slope matches n/m", v.y * q.m == v.x * q.n));
  rep.clauses.push_back(clause("N0(Z) inside Rect of vertex", polygon_subset(nz, rect(v.x, v.y))));

  bool all = std::all_of(rep.clauses.begin(), rep.clauses.end(), [](const ClauseResult& c) { return c.pass; });
  if (all) rep.status = "pass";
  else if (!in_region) rep.status = "outside region";
  else rep.status = "fail";
  return rep;
}

std::string to_string(BulletStatus s) {
  switch (s) {
    case BulletStatus::Pass: return "pass";
    case BulletStatus::Fail: return "fail";
    case BulletStatus::InnerVanishes: return "inner polynomial vanishes";
    case BulletStatus::NotApplicable: return "not applicable";
  }
  return "?";
}

bool TMembershipReport::member() const {
  return std::all_of(bullets.begin(), bullets.end(), [](BulletStatus s) { return s == BulletStatus::Pass; });
}

TMembershipReport certify_T_membership(const PuiseuxPoly& f, long m, long n, long a, long b) {
  TMembershipReport rep;
  auto push = [&](BulletStatus s, std::string d) {
    rep.bullets.push_back(s);
    rep.details.push_back(std::move(d));
  };
  if (f.is_zero()) {
    for (int i = 0; i < 4; ++i) push(BulletStatus::Fail, "f is zero");
    return rep;
  }

  ConvexPolygon n0 = newton_polygon(f, true);
  RatPoint corner(m, n);
  bool b1 = n0.contains(corner) && polygon_subset(n0, rect(Rational(m), Rational(n)));
  push(b1 ? BulletStatus::Pass : BulletStatus::Fail, "N0(f) = " + std::to_string(n0.vertices.size()) + " vertices");

  HomogeneousDecomposition parts = decompose(f, make_direction(0, 1));
  PuiseuxPoly top = parts.part(Rational(n));
  bool b2 = top == PuiseuxPoly::monomial(1, {m, n});
  push(b2 ? BulletStatus::Pass : BulletStatus::Fail, "top y part " + to_string(top));

  PuiseuxPoly sub = parts.part(Rational(n - 1));
  push(sub.is_zero() ? BulletStatus::Pass : BulletStatus::Fail, "next y part " + to_string(sub));

  if (!b1 || !b2 || a < 1 || n % a != 0) {
    push(BulletStatus::NotApplicable, "inner polynomial undefined for these data");
    return rep;
  }
  if (a >= b || gcd(a, b) != 1) {
    push(BulletStatus::NotApplicable, "region needs gcd(a,b) = 1 and a < b");
    return rep;
  }
  PuiseuxPoly z = f - pow(approximate_root(f, a, Rational(m), n), static_cast<unsigned long>(a));
  if (z.is_zero()) {
    push(BulletStatus::InnerVanishes, "z = 0");
    return rep;
  }
  Rational s = 0;
  for (const auto& [e, c] : z.terms()) s = std::max(s, e.y);
  PuiseuxPoly zs = decompose(z, make_direction(0, 1)).part(s);
  if (!zs.is_monomial()) {
    push(BulletStatus::Fail, "top y part of z is not a monomial: " + to_string(zs));
    return rep;
  }
  const ExponentPair& e = zs.leading_term().first;
  RegionR region = loose_region(a, b, m, n);
  bool inside = region_R_contains(region, {e.x, e.y});
  push(inside ? BulletStatus::Pass : BulletStatus::Fail, "top y part of z: " + to_string(zs));
  return rep;
}

NormalizedPair tschirnhausen_normalize(const std::vector<Rational>& alpha, const PuiseuxPoly& W) {
  std::vector<Rational> a = alpha;
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.size() < 2) throw std::invalid_argument("tschirnhausen_normalize: alpha must have positive degree");
  if (a.back() != 1) throw std::invalid_argument("tschirnhausen_normalize: alpha must be monic");
  long k = static_cast<long>(a.size()) - 1;
  Rational s = -a[static_cast<std::size_t>(k - 1)] / k;
  // Taylor shift: coefficients of alpha(z + s).
  std::vector<Rational> shifted(a.size(), Rational(0));
  for (long j = 0; j <= k; ++j) {
    Rational binom = 1;
    for (long i = 0; i <= j; ++i) {
      shifted[static_cast<std::size_t>(j - i)] += a[static_cast<std::size_t>(j)] * binom * pow(s, i);
      binom = binom * (j - i) / (i + 1);
    }
  }
  return {from_ascending(shifted), W - PuiseuxPoly::constant(s)};
}

}  // namespace jacpoly
