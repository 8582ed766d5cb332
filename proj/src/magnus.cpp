#include "jacpoly/magnus.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacpoly {

Rational multinomial(const Rational& c, const std::vector<long>& ms) {
  Rational num = 1, den = 1;
  long total = 0;
  for (long m : ms) {
    if (m < 0) throw std::invalid_argument("multinomial: negative index");
    for (long i = 1; i <= m; ++i) den *= i;
    total += m;
  }
  for (long i = 0; i < total; ++i) num *= c - i;
  return num / den;
}

Rational binomial(const Rational& c, long k) { return multinomial(c, {k}); }

// HLaurent

HLaurent HLaurent::of(const PuiseuxPoly& p, long power) {
  HLaurent h;
  h.add(power, p);
  return h;
}

long HLaurent::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }

void HLaurent::add(long power, const PuiseuxPoly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(power);
  if (it == terms_.end()) {
    terms_.emplace(power, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

PuiseuxPoly HLaurent::cleared(const PuiseuxPoly& H, long K) const {
  PuiseuxPoly out;
  for (const auto& [k, p] : terms_) {
    if (k + K < 0) throw std::invalid_argument("HLaurent::cleared: H power too small");
    out += p * pow(H, static_cast<unsigned long>(k + K));
  }
  return out;
}

PuiseuxPoly HLaurent::evaluate_monomial(const PuiseuxPoly& H) const {
  if (!H.is_monomial() || H.leading_term().second != 1)
    throw std::invalid_argument("HLaurent::evaluate_monomial: H must be a monic monomial");
  const ExponentPair& e = H.leading_term().first;
  PuiseuxPoly out(RingTag::laurent());
  for (const auto& [k, p] : terms_) out += shift_exponents(p, {Rational(e.x * k), Rational(e.y * k)});
  return out;
}

HLaurent operator+(const HLaurent& a, const HLaurent& b) {
  HLaurent out = a;
  for (const auto& [k, p] : b.terms_) out.add(k, p);
  return out;
}

HLaurent operator-(const HLaurent& a, const HLaurent& b) {
  HLaurent out = a;
  for (const auto& [k, p] : b.terms_) out.add(k, -p);
  return out;
}

HLaurent operator*(const HLaurent& a, const HLaurent& b) {
  HLaurent out;
  for (const auto& [i, p] : a.terms_)
    for (const auto& [j, q] : b.terms_) out.add(i + j, p * q);
  return out;
}

HLaurent operator*(const Rational& c, const HLaurent& a) {
  HLaurent out;
  if (c == 0) return out;
  for (const auto& [k, p] : a.terms_) out.add(k, p * c);
  return out;
}

bool equals_after_clearing(const HLaurent& x, const PuiseuxPoly& p, const PuiseuxPoly& H) {
  long K = std::max(0L, -x.min_power());
  return x.cleared(H, K) == p * pow(H, static_cast<unsigned long>(K));
}

// Homogeneous roots

namespace {

bool on_lattice(const ExponentPair& e, const RingTag& tag) {
  long xd = (tag.kind == RingTag::Kind::Q12 || tag.kind == RingTag::Kind::Laurent) ? tag.p : 1;
  long yd = (tag.kind == RingTag::Kind::Q14 || tag.kind == RingTag::Kind::Laurent) ? tag.p : 1;
  return is_integer(e.x * xd) && is_integer(e.y * yd);
}

Integer lattice_gcd(const ExponentPair& e, const RingTag& tag) {
  long xd = (tag.kind == RingTag::Kind::Q12 || tag.kind == RingTag::Kind::Laurent) ? tag.p : 1;
  long yd = (tag.kind == RingTag::Kind::Q14 || tag.kind == RingTag::Kind::Laurent) ? tag.p : 1;
  Rational X = e.x * xd, Y = e.y * yd;
  return gcd(Integer(abs(X.get_num())), Integer(abs(Y.get_num())));
}

// Monic r-th root by leading terms, or nullopt.
std::optional<PuiseuxPoly> monic_root(const PuiseuxPoly& f, long r) {
  const auto& [top, c] = f.leading_term();
  if (c != 1) throw std::logic_error("monic_root: leading coefficient must be 1");
  ExponentPair e1(top.x / r, top.y / r);
  if (!on_lattice(e1, f.tag())) return std::nullopt;
  const ExponentPair bottom = f.terms().begin()->first;
  GradedLexLess less;

  PuiseuxPoly h = PuiseuxPoly::monomial(1, e1, RingTag::laurent(f.tag().p));
  PuiseuxPoly lead_factor = pow(h, static_cast<unsigned long>(r - 1)) * Rational(r);
  const ExponentPair lf = lead_factor.leading_term().first;
  for (std::size_t guard = 0; guard <= f.size() * static_cast<std::size_t>(r) + 4; ++guard) {
    PuiseuxPoly diff = f - pow(h, static_cast<unsigned long>(r));
    if (diff.is_zero()) return h.with_tag(f.tag());
    const auto& [de, dc] = diff.leading_term();
    ExponentPair next = de - lf;
    ExponentPair scaled(next.x * r, next.y * r);
    if (less(scaled, bottom) || !on_lattice(next, f.tag())) return std::nullopt;
    h.add_term(next, dc / Rational(r));
  }
  return std::nullopt;
}

}  // namespace

HomogeneousRoot homogeneous_root(const PuiseuxPoly& f, const Direction& w) {
  if (f.is_zero()) throw std::invalid_argument("homogeneous_root: zero polynomial");
  if (leading_form(f, w) != f) throw std::invalid_argument("homogeneous_root: f is not w-homogeneous");
  HomogeneousRoot res;
  res.kappa = f.leading_term().second;
  PuiseuxPoly g = f * (1 / res.kappa);
  const ExponentPair top = g.leading_term().first;
  const ExponentPair bottom = g.terms().begin()->first;
  Integer gg = gcd(lattice_gcd(top, g.tag()), lattice_gcd(bottom, g.tag()));
  long rmax = gg == 0 ? 1 : to_long(Rational(gg));
  for (long r = rmax; r >= 1; --r) {
    if (rmax % r != 0) continue;
    if (r == 1) {
      res.r = 1;
      res.H = g;
      return res;
    }
    if (auto h = monic_root(g, r)) {
      res.r = r;
      res.H = *h;
      return res;
    }
  }
  return res;
}

// Context and expansions

const PuiseuxPoly& MagnusContext::P_table(long j, long k) const {
  static const PuiseuxPoly zero;
  if (j < 0 || k < 0 || j > k) return zero;
  if (P.empty()) P.push_back({PuiseuxPoly::constant(1)});
  while (static_cast<long>(P.size()) <= k) {
    long kk = static_cast<long>(P.size());
    std::vector<PuiseuxPoly> row(static_cast<std::size_t>(kk) + 1);
    for (long jj = 1; jj <= kk; ++jj) {
      PuiseuxPoly acc;
      for (long i = 1; i <= kk - (jj - 1); ++i) {
        const PuiseuxPoly& prev = P_table(jj - 1, kk - i);
        if (prev.is_zero()) continue;
        PuiseuxPoly part = F_part(i);
        if (!part.is_zero()) acc += part * prev;
      }
      row[static_cast<std::size_t>(jj)] = std::move(acc);
    }
    P.push_back(std::move(row));
  }
  return P[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

PuiseuxPoly MagnusContext::F_part(long i) const { return F_parts.part(d - i); }
PuiseuxPoly MagnusContext::G_part(long i) const { return G_parts.part(e - i); }

namespace {

void require_integral_degrees(const HomogeneousDecomposition& dec, const char* name) {
  for (const auto& [deg, p] : dec.parts)
    if (!is_integer(deg)) throw std::invalid_argument(std::string("magnus: non-integral w-degree in ") + name);
}

long integral(const Rational& q, const char* what) {
  if (!is_integer(q)) throw std::invalid_argument(std::string("magnus: ") + what + " is not an integer");
  return to_long(q);
}

}  // namespace

MagnusContext make_magnus_context(const PuiseuxPoly& F, const PuiseuxPoly& G, const Direction& w) {
  if (F.is_zero() || G.is_zero()) throw std::invalid_argument("magnus: F and G must be nonzero");
  MagnusContext ctx;
  ctx.w = w;
  ctx.d = *w_deg(F, w);
  ctx.e = *w_deg(G, w);
  if (ctx.d <= 0) throw std::invalid_argument("magnus: needs w-deg F > 0");
  HomogeneousRoot root = homogeneous_root(leading_form(F, w), w);
  ctx.r = root.r;
  ctx.H = root.H;
  ctx.kappa = root.kappa;
  ctx.F_parts = decompose(F * (1 / root.kappa), w);
  ctx.G_parts = decompose(G, w);
  require_integral_degrees(ctx.F_parts, "F");
  require_integral_degrees(ctx.G_parts, "G");
  return ctx;
}

HLaurent frac_power_coefficient(const MagnusContext& ctx, const Rational& A, long k) {
  long s = integral(A * ctx.r, "r * A");
  HLaurent out;
  for (long j = 0; j <= k; ++j) {
    const PuiseuxPoly& p = ctx.P_table(j, k);
    if (p.is_zero()) continue;
    Rational bc = binomial(A, j);
    if (bc == 0) continue;
    out.add(s - ctx.r * j, p * bc);
  }
  return out;
}

BasicTruncSeries<HLaurent> frac_power_expand(const MagnusContext& ctx, const Rational& A, int T) {
  BasicTruncSeries<HLaurent> out(T);
  for (int k = 0; k <= T; ++k) out.at(k) = frac_power_coefficient(ctx, A, k);
  return out;
}

bool MagnusReport::residuals_zero() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const PuiseuxPoly& p) { return p.is_zero(); });
}

namespace {

Rational constant_jacobian(const PuiseuxPoly& F, const PuiseuxPoly& G) {
  PuiseuxPoly J = jacobian(F, G);
  if (J.is_zero()) return 0;
  if (!J.is_constant()) throw std::invalid_argument("magnus: the Jacobian of F and G is not constant");
  return J.coefficient({0, 0});
}

// Sum over gamma < upto of c_gamma [F~^{(e-gamma)/d}]_{t^{mu-gamma}}.
HLaurent combination(const MagnusContext& ctx, const std::vector<Rational>& c, long mu) {
  HLaurent S;
  for (long g = 0; g < static_cast<long>(c.size()) && g < mu; ++g) {
    if (c[static_cast<std::size_t>(g)] == 0) continue;
    S = S + c[static_cast<std::size_t>(g)] * frac_power_coefficient(ctx, (ctx.e - g) / ctx.d, mu - g);
  }
  return S;
}

void fill_report_header(MagnusReport& rep, const MagnusContext& ctx) {
  rep.w = ctx.w;
  rep.d = ctx.d;
  rep.e = ctx.e;
  rep.r = ctx.r;
  rep.H = ctx.H;
  rep.kappa = ctx.kappa;
}

void solve_range(const MagnusContext& ctx, MagnusReport& rep, long mu_max) {
  for (long mu = 0; mu <= mu_max; ++mu) {
    HLaurent X = HLaurent::of(ctx.G_part(mu)) - combination(ctx, rep.c, mu);
    Rational sq = ctx.r * (ctx.e - mu) / ctx.d;
    long K = std::max(0L, -X.min_power());
    if (is_integer(sq)) K = std::max(K, -to_long(sq));
    PuiseuxPoly cleared = X.cleared(ctx.H, K);
    Rational c = 0;
    if (is_integer(sq)) {
      PuiseuxPoly target = pow(ctx.H, static_cast<unsigned long>(to_long(sq) + K));
      const auto& [te, tc] = target.leading_term();
      c = cleared.coefficient(te) / tc;
      cleared -= target * c;
    }
    rep.c.push_back(c);
    rep.residuals.push_back(cleared);
  }
}

}  // namespace

MagnusReport magnus_solve(const PuiseuxPoly& F, const PuiseuxPoly& G, const Direction& w) {
  constant_jacobian(F, G);
  MagnusContext ctx = make_magnus_context(F, G, w);
  MagnusReport rep;
  fill_report_header(rep, ctx);
  long mu_max = integral(ctx.d + ctx.e - w.u - w.v - 1, "mu range");
  solve_range(ctx, rep, mu_max);
  return rep;
}

MagnusReport magnus_extended(const PuiseuxPoly& F, const PuiseuxPoly& G) {
  Rational J = constant_jacobian(F, G);
  Direction w = make_direction(0, 1);
  MagnusContext ctx = make_magnus_context(F, G, w);
  PuiseuxPoly top = leading_form(F, w);
  if (!top.is_monomial()) throw std::invalid_argument("magnus_extended: leading y-form of F must be a monomial");
  const ExponentPair mn = top.leading_term().first;
  if (mn.x == mn.y) throw std::invalid_argument("magnus_extended: needs m != n");

  MagnusReport rep;
  fill_report_header(rep, ctx);
  long mu0 = integral(ctx.d + ctx.e - 1, "mu range");
  solve_range(ctx, rep, mu0 - 1);

  // G_{e-mu0} has negative y-degree, hence vanishes, unless d = 1.
  PuiseuxPoly S = (combination(ctx, rep.c, mu0) - HLaurent::of(ctx.G_part(mu0))).evaluate_monomial(ctx.H);
  PuiseuxPoly residual = S;
  Rational sq = ctx.r * (ctx.e - mu0) / ctx.d;
  Rational c_ext = 0;
  if (is_integer(sq)) {
    const ExponentPair& h = ctx.H.leading_term().first;
    ExponentPair hs(h.x * sq, h.y * sq);
    c_ext = -S.coefficient(hs);
    residual += PuiseuxPoly::monomial(c_ext, hs, RingTag::laurent());
  }
  ExponentPair X(1 - mn.x, 1 - mn.y);
  Rational lambda = S.coefficient(X);
  residual -= PuiseuxPoly::monomial(lambda, X, RingTag::laurent());

  rep.c_extended = c_ext;
  rep.lambda = lambda;
  rep.extended_residual = residual;
  rep.lambda_expected = J / ctx.kappa / (mn.y - mn.x);
  rep.extended_ok = rep.residuals_zero() && residual.is_zero() && lambda == *rep.lambda_expected;
  return rep;
}

// One-variable rational powers

namespace {

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inverse(const Series& a, std::size_t len) {
  Series out(len, Rational(0));
  out[0] = 1 / a[0];
  for (std::size_t k = 1; k < len; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * out[k - i];
    out[k] = -s / a[0];
  }
  return out;
}

Series series_pow(const Series& a, long k, std::size_t len) {
  Series base = k < 0 ? series_inverse(a, len) : a;
  base.resize(len, Rational(0));
  Series out(len, Rational(0));
  out[0] = 1;
  for (long i = 0; i < std::labs(k); ++i) out = series_mul(out, base, len);
  return out;
}

}  // namespace

std::vector<Rational> onevar_rational_power(const std::vector<Rational>& A, const std::vector<Rational>& B, long a,
                                            long b, long mu_max) {
  if (A.empty() || A[0] == 0) throw std::invalid_argument("onevar_rational_power: A(0) must be nonzero");
  if (!B.empty() && B[0] != 0) throw std::invalid_argument("onevar_rational_power: B(0) must vanish");
  if (a <= 0) throw std::invalid_argument("onevar_rational_power: a must be positive");
  if (mu_max < 0) return {};
  const std::size_t len = static_cast<std::size_t>(mu_max) + 1;
  Rational A_exp = make_rational(b, a);
  // sum_i binom(b/a, i) A^b (B A^{-a})^i
  Series ratio = series_mul(B, series_pow(A, -a, len), len);
  Series term = series_pow(A, b, len);
  Series out(len, Rational(0));
  for (long i = 0; i < static_cast<long>(len); ++i) {
    Rational bc = binomial(A_exp, i);
    for (std::size_t k = 0; k < len; ++k) out[k] += bc * term[k];
    term = series_mul(term, ratio, len);
    if (std::all_of(term.begin(), term.end(), [](const Rational& q) { return q == 0; })) break;
  }
  return out;
}

}  // namespace jacpoly
