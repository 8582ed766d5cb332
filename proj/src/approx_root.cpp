#include <algorithm>
#include <stdexcept>

#include "jacpoly/genfactory.hpp"

namespace jacpoly {

namespace {

// Sign of A + sqrt(2) B.
int sign_with_sqrt2(const Rational& A, const Rational& B) {
  int sa = sign(A), sb = sign(B);
  if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  Rational d = A * A - 2 * B * B;
  return sa > 0 ? sign(d) : -sign(d);
}

bool sqrt2_greater(const RatPoint& p, const RatPoint& q) { return sign_with_sqrt2(p.x - q.x, p.y - q.y) > 0; }

long x_denominator(const PuiseuxPoly& f) {
  Integer d = 1;
  for (const auto& [e, c] : f.terms()) d = lcm(d, Integer(e.x.get_den()));
  if (!d.fits_slong_p()) throw std::overflow_error("exponent denominator too large");
  return d.get_si();
}

// Coefficient of t in P * R.
Rational product_coefficient(const PuiseuxPoly& P, const PuiseuxPoly& R, const ExponentPair& t) {
  Rational s = 0;
  for (const auto& [e, c] : P.terms()) {
    Rational r = R.coefficient(t - e);
    if (r != 0) s += c * r;
  }
  return s;
}

}  // namespace

std::vector<RatPoint> corner_order_grid(const Rational& M, long N, long p) {
  if (p <= 0 || M < 0 || N < 0) throw std::invalid_argument("corner_order: bad rectangle");
  Rational steps = M * p;
  if (!is_integer(steps)) throw std::invalid_argument("corner_order: corner is off the grid");
  long xs = to_long(steps);
  std::vector<RatPoint> pts;
  for (long i = 0; i <= xs; ++i)
    for (long j = 0; j <= N; ++j) pts.emplace_back(make_rational(i, p), Rational(j));
  std::sort(pts.begin(), pts.end(), sqrt2_greater);
  return pts;
}

std::vector<RatPoint> corner_order(long m, long n, long a) {
  if (a <= 0 || m % a != 0 || n % a != 0) throw std::invalid_argument("corner_order: a must divide m and n");
  return corner_order_grid(Rational(m / a), n / a, 1);
}

PuiseuxPoly approximate_root(const PuiseuxPoly& f, long delta, const Rational& M, long N) {
  if (delta < 1) throw std::invalid_argument("approximate_root: degree must be positive");
  if (N % delta != 0) throw std::invalid_argument("approximate_root: degree must divide the y corner");
  if (f.coefficient({M, Rational(N)}) != 1) throw std::invalid_argument("approximate_root: corner coefficient must be 1");
  for (const auto& [e, c] : f.terms())
    if (e.x < 0 || e.x > M || e.y < 0 || e.y > N)
      throw std::invalid_argument("approximate_root: support leaves Rect_{M,N}");
  if (delta == 1) return f;

  Rational Mr = M / delta;
  long p = lcm(x_denominator(f), to_long(Rational(Mr.get_den())));
  auto pts = corner_order_grid(Mr, N / delta, p);
  const ExponentPair z1(pts[0].x, pts[0].y);
  const ExponentPair base(z1.x * (delta - 1), z1.y * (delta - 1));

  PuiseuxPoly P = PuiseuxPoly::monomial(1, z1, RingTag::laurent(p));
  PuiseuxPoly R = pow(P, static_cast<unsigned long>(delta - 1));
  for (std::size_t k = 1; k < pts.size(); ++k) {
    ExponentPair t = base + ExponentPair(pts[k].x, pts[k].y);
    Rational q = (f.coefficient(t) - product_coefficient(P, R, t)) / delta;
    if (q == 0) continue;
    P.add_term({pts[k].x, pts[k].y}, q);
    R = pow(P, static_cast<unsigned long>(delta - 1));
  }
  return P.minimal_tag();
}

namespace {

struct Corner {
  Rational M;
  long N;
};

Corner check_corner(const PuiseuxPoly& F, long a) {
  if (a < 1) throw std::invalid_argument("pre_generator: a must be positive");
  if (F.is_zero()) throw std::invalid_argument("pre_generator: F is zero");
  Rational M = 0, N = 0;
  for (const auto& [e, c] : F.terms()) {
    M = std::max(M, e.x);
    N = std::max(N, e.y);
  }
  if (!is_integer(N)) throw std::invalid_argument("pre_generator: fractional y exponent");
  long n = to_long(N);
  if (F.coefficient({M, N}) != 1) throw std::invalid_argument("pre_generator: F needs corner coefficient 1");
  for (const auto& [e, c] : F.terms())
    if (e.x < 0 || e.y < 0) throw std::invalid_argument("pre_generator: negative exponent");
  if (n % a != 0) throw std::invalid_argument("pre_generator: a must divide n");
  if (F.tag().kind == RingTag::Kind::Plain && !is_integer(M / a))
    throw std::invalid_argument("pre_generator: a must divide m");
  return {M, n};
}

}  // namespace

PuiseuxPoly pre_generator(const PuiseuxPoly& F, long a) {
  Corner c = check_corner(F, a);
  return approximate_root(F, a, c.M, c.N);
}

PuiseuxPoly inner_poly(const PuiseuxPoly& F, long a) {
  return F - pow(pre_generator(F, a), static_cast<unsigned long>(a));
}

}  // namespace jacpoly
