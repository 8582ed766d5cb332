#include "jacpoly/walker.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace jacpoly {

namespace {

using Uni = std::vector<Rational>;  // ascending coefficients

void trim(Uni& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Uni uni_mul(const Uni& a, const Uni& b) {
  if (a.empty() || b.empty()) return {};
  Uni out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Quotient and remainder; b nonzero.
std::pair<Uni, Uni> uni_divmod(Uni a, const Uni& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Uni q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Uni uni_monic(Uni p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Uni uni_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Uni r = uni_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(a);
}

Uni uni_derivative(const Uni& p) {
  Uni out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

Rational uni_eval(const Uni& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Prime factorization by trial division; a cofactor left after the bound is
// kept as if prime.
std::vector<std::pair<Integer, long>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, long>> out;
  if (n < 0) n = -n;
  const unsigned long bound = 1000000;
  for (unsigned long d = 2; d <= bound; ++d) {
    Integer dd = d;
    if (dd * dd > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
      n /= dd;
      ++e;
    }
    out.emplace_back(dd, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [prime, e] : factor_integer(n)) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (long k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Integer coefficients with the same roots.
std::vector<Integer> clear_denominators(const Uni& p) {
  Integer l = 1;
  for (const auto& c : p) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> out;
  for (const auto& c : p) out.emplace_back(Rational(c * l).get_num());
  return out;
}

RatPoint tail_at(const ConvexPolygon& poly, std::size_t i) { return poly.vertices[i] - poly.prev(i); }

Rational dot(const Direction& w, const RatPoint& p) { return w_weight(w, p); }

void check_walk_direction(const Direction& w) {
  if (w.u <= 0 || w.v > 0) throw std::invalid_argument("walk direction must be (v,-u) with u >= 0 and v > 0");
}

}  // namespace

std::pair<std::vector<RootMult>, std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs) {
  Uni g = uni_monic(coeffs);
  if (g.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<RootMult> roots;
  long zero_mult = 0;
  while (g.size() > 1 && g.front() == 0) {
    g.erase(g.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});

  auto take_root = [&](const Rational& r) {
    Uni lin{Rational(-r), Rational(1)};
    long mult = 0;
    while (g.size() > 1) {
      auto [q, rem] = uni_divmod(g, lin);
      if (!rem.empty()) break;
      g = std::move(q);
      ++mult;
    }
    if (mult > 0) roots.push_back({r, mult});
  };

  // The squarefree part keeps the candidate search small.
  Uni sq = g;
  if (g.size() > 2) sq = uni_monic(uni_divmod(g, uni_gcd(g, uni_derivative(g))).first);
  if (sq.size() == 2) {
    take_root(Rational(-sq[0]));
  } else if (sq.size() > 2) {
    auto ints = clear_denominators(sq);
    std::vector<Integer> num = divisors(ints.front());
    std::vector<Integer> den = divisors(ints.back());
    std::vector<Rational> cands;
    for (const auto& pd : num)
      for (const auto& qd : den) {
        Rational r(pd, qd);
        r.canonicalize();
        cands.push_back(r);
        cands.push_back(-r);
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& r : cands) {
      if (g.size() <= 1) break;
      if (uni_eval(sq, r) == 0) take_root(r);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RootMult& x, const RootMult& y) { return x.alpha < y.alpha; });
  return {roots, g};
}

long FactoredLeadingForm::multiplicity(const Rational& alpha) const {
  for (const auto& r : roots)
    if (r.alpha == alpha) return r.mult;
  return 0;
}

PuiseuxPoly FactoredLeadingForm::expand() const {
  Uni t{c};
  for (long k = 0; k < t_power; ++k) t.insert(t.begin(), Rational(0));
  for (const auto& r : roots)
    for (long k = 0; k < r.mult; ++k) t = uni_mul(t, {Rational(-r.alpha), Rational(1)});
  t = uni_mul(t, remnant.empty() ? Uni{Rational(1)} : remnant);
  long uj = -w.v, vj = w.u;
  Rational slope = make_rational(uj, vj);
  long p = lcm(vj, static_cast<long>(mpz_get_si(x_prefactor_exp.get_den_mpz_t())));
  PuiseuxPoly out(RingTag::laurent(p));
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    long jj = static_cast<long>(j);
    out.add_term({Rational(x_prefactor_exp + slope * jj), Rational(jj)}, t[j]);
  }
  return out.minimal_tag();
}

FactoredLeadingForm factor_leading_form(const PuiseuxPoly& f, const Direction& w) {
  if (f.is_zero()) throw std::invalid_argument("factor_leading_form of zero");
  check_walk_direction(w);
  FactoredLeadingForm out;
  out.w = w;
  PuiseuxPoly lf = leading_form(f, w);
  Rational deg = *w_deg(f, w);
  out.x_prefactor_exp = deg / w.u;
  long top = 0;
  long low = -1;
  for (const auto& [e, c] : lf.terms()) {
    long j = to_long(e.y);
    top = std::max(top, j);
    low = low < 0 ? j : std::min(low, j);
  }
  Uni t(static_cast<std::size_t>(top - low + 1), Rational(0));
  for (const auto& [e, c] : lf.terms()) t[static_cast<std::size_t>(to_long(e.y) - low)] = c;
  out.t_power = low;
  out.c = t.back();
  auto [roots, rem] = rational_roots(t);
  out.roots = std::move(roots);
  out.remnant = std::move(rem);
  return out;
}

Direction next_direction(const ConvexPolygon& poly, const RatPoint& v) {
  auto idx = poly.index_of(v);
  if (!idx) throw std::invalid_argument("next_direction: " + to_string(v) + " is not a vertex");
  if (poly.vertices.size() < 2) throw std::invalid_argument("next_direction: polygon is a point");
  // Counterclockwise traversal turns the edge normals counterclockwise, so the
  // edge arriving at v carries the smaller normal.
  RatPoint d = tail_at(poly, *idx);
  return primitive_direction({d.y, Rational(-d.x)});
}

Direction next_direction(const PuiseuxPoly& F, const RatPoint& vF) {
  return next_direction(newton_polygon(F, true), vF);
}

RatPoint lower_face_vertex(const ConvexPolygon& poly, const Direction& w) {
  if (poly.empty()) throw std::invalid_argument("lower_face_vertex of an empty polygon");
  const RatPoint* best = &poly.vertices.front();
  Rational best_w = dot(w, *best);
  for (const auto& p : poly.vertices) {
    Rational pw = dot(w, p);
    if (pw > best_w || (pw == best_w && p.y < best->y)) {
      best = &p;
      best_w = pw;
    }
  }
  return *best;
}

bool star_condition(const WalkState& s) { return dot(s.w, s.vZ) < dot(s.w, s.vF); }

std::string to_string(WalkOutcome o) {
  switch (o) {
    case WalkOutcome::StarFailedCase1: return "star failed, case 1";
    case WalkOutcome::StarFailedCase2: return "star failed, case 2";
    case WalkOutcome::RootIrrational: return "root irrational";
    case WalkOutcome::MaxStepsExceeded: return "max steps exceeded";
    case WalkOutcome::ZeroInner: return "Z=0";
  }
  return "";
}

Orientation parse_orientation(const std::string& s) {
  if (s == "en") return Orientation::EN;
  if (s == "en-mirror") return Orientation::ENMirror;
  if (s == "ne") return Orientation::NE;
  throw std::invalid_argument("unknown orientation '" + s + "' (en, en-mirror, ne)");
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::EN: return "en";
    case Orientation::ENMirror: return "en-mirror";
    case Orientation::NE: return "ne";
  }
  return "";
}

WalkState walk_step(const WalkState& s, const Rational& alpha) {
  if (!s.star_holds) throw std::invalid_argument("walk_step requires the star condition");
  check_walk_direction(s.w);
  long uj = -s.w.v, vj = s.w.u;
  WalkState next;
  next.j = s.j + 1;
  next.p = lcm(vj, s.p);
  next.F = shift_substitute(s.F, alpha, uj, vj).with_tag(RingTag::q12(next.p));
  next.G = shift_substitute(s.G, alpha, uj, vj).with_tag(RingTag::q12(next.p));
  next.Z = shift_substitute(s.Z, alpha, uj, vj).with_tag(RingTag::q12(next.p));
  next.vF = lower_face_vertex(newton_polygon(next.F, true), s.w);
  next.vZ = lower_face_vertex(newton_polygon(next.Z, true), s.w);
  next.vG = lower_face_vertex(newton_polygon(next.G, true), s.w);
  next.w = next_direction(next.F, next.vF);
  next.star_holds = star_condition(next);
  return next;
}

long walk_step_cap() {
  if (const char* env = std::getenv("JACPOLY_MAX_STEPS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 500;
}

WalkTrace run_walk(const PuiseuxPoly& F, const PuiseuxPoly& G, const QTuple& qt, Orientation orientation,
                   std::optional<long> max_steps) {
  check_q_tuple(qt.a, qt.b, qt.m, qt.n);
  if (orientation == Orientation::ENMirror ? qt.m < qt.n : qt.m > qt.n)
    throw std::invalid_argument("orientation " + to_string(orientation) + " does not fit m=" + std::to_string(qt.m) +
                                ", n=" + std::to_string(qt.n));
  if (rect_membership(F, qt.m, qt.n) == RectMembership::Neither)
    throw std::invalid_argument("F is not in the closure of R_{m,n}");

  WalkTrace trace;
  trace.orientation = orientation;
  // A vanishing F - Q^a ends the analysis before any vertex is used, so the
  // closure of R_{m,n} is enough there.
  if (rect_membership(F, qt.m, qt.n) != RectMembership::InR) {
    if (!inner_poly(F, qt.a).is_zero()) throw std::invalid_argument("F is not in R_{m,n}");
    trace.qt = qt;
    trace.outcome = WalkOutcome::ZeroInner;
    return trace;
  }
  if (rect_membership(G, qt.b * qt.m / qt.a, qt.b * qt.n / qt.a) != RectMembership::InR)
    throw std::invalid_argument("G is not in R_{bm/a,bn/a}");
  GeneratorResult gen = f_generator(F, qt);

  WalkState s;
  s.F = F;
  s.G = G;
  s.Z = gen.Z;
  long m = qt.m, n = qt.n;
  if (orientation == Orientation::NE) {
    s.F = swap_xy(s.F);
    s.G = swap_xy(s.G);
    s.Z = swap_xy(s.Z);
    std::swap(m, n);
  }
  trace.qt = {qt.a, qt.b, m, n};
  if (s.Z.is_zero()) {
    trace.outcome = WalkOutcome::ZeroInner;
    return trace;
  }
  const long a = qt.a, b = qt.b;
  const Rational ba = make_rational(b, a);
  const Rational shrink = make_rational(a - 1, a);

  s.vF = RatPoint(m, n);
  s.vZ = en_vertex(newton_polygon(s.Z, true));
  s.vG = en_vertex(newton_polygon(s.G, true));
  s.w = next_direction(s.F, s.vF);
  s.star_holds = star_condition(s);

  bool cond_c = s.vZ.y < shrink * s.vF.y;
  bool cond_d = orientation == Orientation::EN
                    ? in_L_v(a, b, s.vF, s.vZ) || (s.vZ.y == 0 && s.vZ.x > 0)
                    : s.vZ.y >= 0 && s.vZ.y * m < s.vZ.x * n;
  trace.initially_admissible = cond_c && cond_d;

  const long cap = max_steps.value_or(walk_step_cap());
  while (true) {
    if (s.vG != ba * s.vF) trace.vG_tracks = false;
    if (!s.star_holds) {
      trace.states.push_back(s);
      break;
    }
    if (trace.initially_admissible && !(s.vZ.y < shrink * s.vF.y))
      throw std::logic_error("vertex inequality deg_y vZ < (a-1)/a deg_y vF broken at step " + std::to_string(s.j));
    if (static_cast<long>(trace.states.size()) >= cap) {
      trace.states.push_back(s);
      trace.outcome = WalkOutcome::MaxStepsExceeded;
      return trace;
    }
    FactoredLeadingForm fF = factor_leading_form(s.F, s.w);
    FactoredLeadingForm fZ = factor_leading_form(s.Z, s.w);
    // Minimal n_i / m_i; roots are ascending, so ties keep the smallest alpha.
    std::optional<std::size_t> pick;
    Rational best;
    for (std::size_t i = 0; i < fF.roots.size(); ++i) {
      Rational ratio = make_rational(fZ.multiplicity(fF.roots[i].alpha), fF.roots[i].mult);
      if (!pick || ratio < best) {
        pick = i;
        best = ratio;
      }
    }
    // With irrational roots present the rational choice must still respect the
    // averaged ratio.
    bool usable = pick.has_value() && (fF.fully_split() || best * s.vF.y <= s.vZ.y);
    if (!usable) {
      s.factored_F = fF;
      trace.states.push_back(s);
      trace.outcome = WalkOutcome::RootIrrational;
      trace.blocking_form = leading_form(s.F, s.w);
      return trace;
    }
    s.factored_F = fF;
    s.chosen_root = fF.roots[*pick].alpha;
    WalkState next = walk_step(s, *s.chosen_root);
    trace.states.push_back(std::move(s));
    s = std::move(next);
  }

  const WalkState& last = trace.states.back();
  if (dot(last.w, last.vZ) == dot(last.w, last.vF)) {
    trace.outcome = WalkOutcome::StarFailedCase1;
    PuiseuxPoly J = jacobian(leading_form(last.F, last.w), leading_form(last.G, last.w));
    if (J.is_zero()) {
      trace.leading_jacobian_zero = true;
    } else {
      trace.certificate = *w_deg(last.F, last.w) + *w_deg(last.G, last.w) - Rational(last.w.u + last.w.v);
    }
  } else {
    trace.outcome = WalkOutcome::StarFailedCase2;
  }
  return trace;
}

}  // namespace jacpoly
