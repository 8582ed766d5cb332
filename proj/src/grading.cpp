#include "jacpoly/grading.hpp"

#include <cstdlib>
#include <stdexcept>

namespace jacpoly {

Direction make_direction(long u, long v) {
  if (gcd(std::labs(u), std::labs(v)) != 1) throw std::invalid_argument("direction must be primitive");
  if (u <= 0 && v <= 0) throw std::invalid_argument("direction needs u > 0 or v > 0");
  return {u, v};
}

Direction primitive_direction(const RatPoint& vec) {
  Integer den = lcm(vec.x.get_den(), vec.y.get_den());
  Integer a = vec.x.get_num() * (den / vec.x.get_den());
  Integer b = vec.y.get_num() * (den / vec.y.get_den());
  Integer g = gcd(Integer(abs(a)), Integer(abs(b)));
  if (g == 0) throw std::invalid_argument("zero vector has no direction");
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p()) throw std::overflow_error("direction too large");
  return make_direction(a.get_si(), b.get_si());
}

Rational w_weight(const Direction& w, const ExponentPair& e) { return e.x * w.u + e.y * w.v; }
Rational w_weight(const Direction& w, const RatPoint& p) { return p.x * w.u + p.y * w.v; }

std::optional<Rational> w_deg(const PuiseuxPoly& f, const Direction& w) {
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms()) {
    Rational d = w_weight(w, e);
    if (!best || d > *best) best = d;
  }
  return best;
}

PuiseuxPoly leading_form(const PuiseuxPoly& f, const Direction& w) {
  auto d = w_deg(f, w);
  if (!d) throw std::domain_error("leading form of zero");
  PuiseuxPoly out(f.tag());
  for (const auto& [e, c] : f.terms())
    if (w_weight(w, e) == *d) out.add_term(e, c);
  return out;
}

PuiseuxPoly HomogeneousDecomposition::part(const Rational& deg) const {
  auto it = parts.find(deg);
  return it == parts.end() ? PuiseuxPoly() : it->second;
}

PuiseuxPoly HomogeneousDecomposition::sum() const {
  PuiseuxPoly s;
  for (const auto& [d, p] : parts) s += p;
  return s;
}

HomogeneousDecomposition decompose(const PuiseuxPoly& f, const Direction& w) {
  HomogeneousDecomposition out;
  out.direction = w;
  for (const auto& [e, c] : f.terms()) {
    auto [it, inserted] = out.parts.try_emplace(w_weight(w, e), PuiseuxPoly(f.tag()));
    it->second.add_term(e, c);
  }
  return out;
}

namespace {

long cross_dir(const Direction& a, const Direction& b) { return a.u * b.v - a.v * b.u; }
long dot_dir(const Direction& a, const Direction& b) { return a.u * b.u + a.v * b.v; }

bool in_half_circle(const Direction& w, const Direction& anchor) {
  long c = cross_dir(anchor, w);
  return c > 0 || (c == 0 && dot_dir(anchor, w) > 0);
}

}  // namespace

std::strong_ordering direction_cmp(const Direction& a, const Direction& b, const Direction& anchor) {
  if (!in_half_circle(a, anchor) || !in_half_circle(b, anchor))
    throw std::invalid_argument("direction_cmp: directions span at least a half circle from the anchor");
  if (a == b) return std::strong_ordering::equal;
  return cross_dir(a, b) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace jacpoly
