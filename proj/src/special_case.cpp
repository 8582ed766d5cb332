#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "jacpoly/magnus.hpp"

namespace jacpoly {

// MultiPoly

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("MultiPoly::variable: index");
  Exponent e(nvars, 0);
  e[i] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
  if (a.is_zero() && a.nvars_ == 0) a.nvars_ = b.nvars_;
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) throw std::invalid_argument("MultiPoly: variable count mismatch");
      MultiPoly::Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly operator*(const Rational& c, MultiPoly a) {
  if (c == 0) return MultiPoly(a.nvars_);
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

MultiPoly pow(const MultiPoly& f, long k) {
  if (k < 0) {
    if (!f.is_monomial()) throw std::invalid_argument("MultiPoly pow: negative power of a non-monomial");
    const auto& [e, c] = *f.terms().begin();
    MultiPoly::Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    return pow(MultiPoly::monomial(ne, 1 / c), -k);
  }
  MultiPoly out = MultiPoly::constant(f.nvars(), 1);
  MultiPoly base = f;
  while (k > 0) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
  if (images.size() != f.nvars()) throw std::invalid_argument("substitute: one image per variable");
  std::size_t nv = images.empty() ? 0 : images[0].nvars();
  MultiPoly out(nv);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(nv, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = t * pow(images[i], e[i]);
    out += t;
  }
  return out;
}

Rational evaluate(const MultiPoly& f, const std::vector<Rational>& values) {
  if (values.size() != f.nvars()) throw std::invalid_argument("evaluate: one value per variable");
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= pow(values[i], e[i]);
    s += t;
  }
  return s;
}

MultiPoly w_weighted_part(const MultiPoly& f, const std::vector<Rational>& w, const Rational& d) {
  if (w.size() != f.nvars()) throw std::invalid_argument("w_weighted_part: one weight per variable");
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
    if (s == d) out.add_term(e, c);
  }
  return out;
}

PuiseuxPoly to_puiseux(const MultiPoly& f) {
  if (f.nvars() > 2) throw std::invalid_argument("to_puiseux: at most two variables");
  PuiseuxPoly out(RingTag::laurent());
  for (const auto& [e, c] : f.terms()) {
    long x = e.size() > 0 ? e[0] : 0;
    long y = e.size() > 1 ? e[1] : 0;
    out.add_term({x, y}, c);
  }
  return out.minimal_tag();
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool any = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      vars << (any ? "*" : "") << "x" << i;
      if (e[i] != 1) vars << "^" << (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
      any = true;
    }
    if (!any) os << to_string(mag);
    else if (mag == 1) os << vars.str();
    else os << to_string(mag) << "*" << vars.str();
  }
  return os.str();
}

// Special-case context

Rational minimal_scaling(const std::vector<std::optional<Rational>>& v, const std::vector<Rational>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("minimal_scaling: length mismatch");
  std::optional<Rational> k;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (w[i] <= 0) throw std::invalid_argument("minimal_scaling: weights must be positive");
    Rational q = *v[i] / w[i];
    if (!k || q > *k) k = q;
  }
  if (!k) throw std::invalid_argument("minimal_scaling: every degree is -infinity");
  return *k;
}

SpecialCaseContext make_special_case_context(long a, long b, long s, long m, const Rational& d_zeta,
                                             const std::vector<Rational>& e,
                                             const std::vector<std::optional<Rational>>& v) {
  if (a < 2 || b < 1) throw std::invalid_argument("special case: needs a >= 2, b >= 1");
  if (s < 0 || s > a - 2) throw std::invalid_argument("special case: needs 0 <= s <= a - 2");
  SpecialCaseContext ctx;
  ctx.a = a;
  ctx.b = b;
  ctx.n = a;
  ctx.s = s;
  ctx.d_p = make_rational(m, (a - s) * a);
  ctx.d_zeta = d_zeta;
  for (long l = 0; l < s; ++l) ctx.w_vec.push_back(Rational(a - l));
  ctx.e_coeffs = e;
  ctx.e_coeffs.resize(static_cast<std::size_t>(a + b), Rational(0));
  ctx.k = s > 0 ? minimal_scaling(v, ctx.w_vec) : Rational(0);
  return ctx;
}

namespace {

// Calls visit(n) for every n >= 0 with sum_l weights[l] * n[l] = total.
void enumerate_weighted(const std::vector<long>& weights, long total,
                        const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> n(weights.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t l, long left) {
    if (l == weights.size()) {
      if (left == 0) visit(n);
      return;
    }
    for (long k = 0; k * weights[l] <= left; ++k) {
      n[l] = k;
      rec(l + 1, left - k * weights[l]);
    }
    n[l] = 0;
  };
  if (total >= 0) rec(0, total);
}

}  // namespace

MultiPoly hhat_poly(const SpecialCaseContext& ctx, long i) {
  const long a = ctx.a, b = ctx.b, s = ctx.s;
  if (s >= a) throw std::invalid_argument("hhat_poly: needs s < a");
  const std::size_t nv = static_cast<std::size_t>(s) + 1;
  std::vector<long> weights;
  for (long l = 0; l <= s; ++l) weights.push_back(a - l);
  MultiPoly out(nv);
  for (long j = 0; j < static_cast<long>(ctx.e_coeffs.size()) && j <= i; ++j) {
    const Rational& ej = ctx.e_coeffs[static_cast<std::size_t>(j)];
    if (ej == 0) continue;
    Rational A = make_rational(b - j, a);
    enumerate_weighted(weights, i - j, [&](const std::vector<long>& n) {
      MultiPoly::Exponent e(nv, 0);
      for (long l = 0; l < s; ++l) e[static_cast<std::size_t>(l)] = static_cast<int>(n[static_cast<std::size_t>(l)]);
      e[static_cast<std::size_t>(s)] = static_cast<int>(j);
      out.add_term(e, ej * multinomial(A, n));
    });
  }
  return out;
}

Rational weighted_multinomial_h(const SpecialCaseContext& ctx, long i, const std::vector<Rational>& vars,
                                const Rational& pz_ratio) {
  if (ctx.s < 1) throw std::invalid_argument("weighted_multinomial_h: needs s >= 1");
  if (static_cast<long>(vars.size()) != ctx.s) throw std::invalid_argument("weighted_multinomial_h: needs s values");
  std::vector<Rational> values = vars;
  values.push_back(pz_ratio);
  return evaluate(hhat_poly(ctx, i), values);
}

MultiPoly h_star_closed(long a, long b, long s, long i) {
  if (s < 1 || s > a) throw std::invalid_argument("h_star_closed: needs 1 <= s <= a");
  std::vector<long> weights;
  for (long l = 0; l < s; ++l) weights.push_back(a - l);
  const std::size_t nv = static_cast<std::size_t>(s);
  MultiPoly out(nv);
  Rational A = make_rational(b, a);
  enumerate_weighted(weights, i, [&](const std::vector<long>& n) {
    MultiPoly::Exponent e(nv);
    for (std::size_t l = 0; l < nv; ++l) e[l] = static_cast<int>(n[l]);
    out.add_term(e, multinomial(A, n));
  });
  return out;
}

// Descending series in y

namespace {

constexpr long kExact = -(1L << 40);

// Coefficients of y^k for k >= floor are exact.
struct DescSeries {
  std::map<long, MultiPoly> c;
  long floor = kExact;
  std::size_t nv = 0;

  long top() const { return c.empty() ? kExact : c.rbegin()->first; }
  void add(long k, const MultiPoly& p) {
    if (k < floor || p.is_zero()) return;
    auto it = c.find(k);
    if (it == c.end()) {
      c.emplace(k, p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) c.erase(it);
  }
};

DescSeries from_poly(const std::vector<MultiPoly>& p, std::size_t nv) {
  DescSeries s;
  s.nv = nv;
  for (std::size_t k = 0; k < p.size(); ++k) s.add(static_cast<long>(k), p[k]);
  return s;
}

DescSeries mul(const DescSeries& a, const DescSeries& b, long cutoff) {
  DescSeries out;
  out.nv = std::max(a.nv, b.nv);
  if (a.c.empty() || b.c.empty()) {
    out.floor = std::max({cutoff, a.floor, b.floor});
    return out;
  }
  long f1 = a.floor == kExact ? kExact : a.floor + b.top();
  long f2 = b.floor == kExact ? kExact : b.floor + a.top();
  out.floor = std::max({f1, f2, cutoff});
  for (const auto& [i, p] : a.c)
    for (const auto& [j, q] : b.c)
      if (i + j >= out.floor) out.add(i + j, p * q);
  return out;
}

DescSeries scale(const DescSeries& a, const Rational& r) {
  DescSeries out;
  out.nv = a.nv;
  out.floor = a.floor;
  for (const auto& [k, p] : a.c) out.add(k, r * p);
  return out;
}

DescSeries add(const DescSeries& a, const DescSeries& b) {
  DescSeries out;
  out.nv = std::max(a.nv, b.nv);
  out.floor = std::max(a.floor, b.floor);
  for (const auto& [k, p] : a.c) out.add(k, p);
  for (const auto& [k, p] : b.c) out.add(k, p);
  return out;
}

DescSeries one(std::size_t nv) {
  DescSeries s;
  s.nv = nv;
  s.add(0, MultiPoly::constant(nv, 1));
  return s;
}

// 1 / f down to y^cutoff; the top coefficient of f must be a monomial.
DescSeries inverse(const DescSeries& f, long cutoff) {
  if (f.c.empty()) throw std::invalid_argument("inverse of zero series");
  const long N = f.top();
  const MultiPoly& lead = f.c.rbegin()->second;
  if (!lead.is_monomial()) throw std::invalid_argument("h_series: top coefficient of q must be a monomial");
  MultiPoly linv = pow(lead, -1);
  // f = lead y^N (1 + v), v has negative y-degrees.
  DescSeries v;
  v.nv = f.nv;
  for (const auto& [k, p] : f.c)
    if (k != N) v.add(k - N, p * linv);
  v.floor = f.floor == kExact ? kExact : f.floor - N;
  const long inner_cut = cutoff + N;
  DescSeries sum = one(f.nv);
  sum.floor = inner_cut;
  DescSeries term = one(f.nv);
  DescSeries neg_v = scale(v, -1);
  while (true) {
    term = mul(term, neg_v, inner_cut);
    if (term.c.empty()) break;
    sum = add(sum, term);
  }
  sum.floor = std::max(sum.floor, term.floor);
  DescSeries out;
  out.nv = f.nv;
  out.floor = sum.floor - N;
  for (const auto& [k, p] : sum.c) out.add(k - N, p * linv);
  return out;
}

DescSeries power(const DescSeries& f, long k, long cutoff) {
  if (k < 0) return power(inverse(f, cutoff), -k, cutoff);
  DescSeries out = one(f.nv);
  for (long i = 0; i < k; ++i) out = mul(out, f, cutoff);
  return out;
}

}  // namespace

std::map<long, MultiPoly> h_series(long a, long b, const std::vector<Rational>& e, const std::vector<MultiPoly>& q,
                                   const std::vector<MultiPoly>& z, long low) {
  if (a < 1) throw std::invalid_argument("h_series: a must be positive");
  std::size_t nv = 0;
  for (const auto& p : q) nv = std::max(nv, p.nvars());
  for (const auto& p : z) nv = std::max(nv, p.nvars());
  DescSeries qs = from_poly(q, nv);
  DescSeries zs = from_poly(z, nv);
  if (qs.c.empty()) throw std::invalid_argument("h_series: q must be nonzero");
  const long N = qs.top();
  if (!zs.c.empty() && zs.top() >= a * N) throw std::invalid_argument("h_series: z must have y-degree below a deg q");

  const long margin = (std::labs(b) + 2 * a + static_cast<long>(e.size()) + 2) * (N + 1) + std::max(0L, zs.top());
  const long cut = low - margin;
  DescSeries qa_inv = inverse(power(qs, a, cut), cut);
  DescSeries u = mul(zs, qa_inv, cut);

  DescSeries total;
  total.nv = nv;
  for (long j = 0; j < static_cast<long>(e.size()); ++j) {
    const Rational& ej = e[static_cast<std::size_t>(j)];
    if (ej == 0) continue;
    Rational A = make_rational(b - j, a);
    DescSeries U = one(nv);
    U.floor = cut;
    DescSeries uk = one(nv);
    for (long k = 1;; ++k) {
      uk = mul(uk, u, cut);
      if (uk.c.empty()) break;
      U = add(U, scale(uk, binomial(A, k)));
    }
    U.floor = std::max(U.floor, uk.floor);
    DescSeries term = mul(power(qs, b - j, cut), U, cut);
    total = add(total, scale(term, ej));
  }
  if (total.floor > low) throw std::logic_error("h_series: working precision too small");
  std::map<long, MultiPoly> out;
  for (const auto& [k, p] : total.c)
    if (k >= low) out.emplace(k, p);
  return out;
}

std::map<long, MultiPoly> y_rational_power(const std::vector<MultiPoly>& f, long a, long b, long low) {
  if (static_cast<long>(f.size()) != a + 1) throw std::invalid_argument("y_rational_power: f needs degree a");
  std::size_t nv = f.back().nvars();
  if (f.back() != MultiPoly::constant(nv, 1)) throw std::invalid_argument("y_rational_power: f must be monic");
  std::vector<MultiPoly> q{MultiPoly(nv), MultiPoly::constant(nv, 1)};
  std::vector<MultiPoly> z(f.begin(), f.end() - 1);
  return h_series(a, b, {Rational(1)}, q, z, low);
}

// Recurrence

namespace {

PuiseuxPoly b_at(const std::vector<PuiseuxPoly>& B, long b, long idx) {
  if (idx > b) return PuiseuxPoly();
  long k = b - idx;
  if (k >= static_cast<long>(B.size())) throw std::out_of_range("recurrence: B coefficient not supplied");
  return B[static_cast<std::size_t>(k)];
}

}  // namespace

PuiseuxPoly recurrence_check(const std::vector<PuiseuxPoly>& F, const std::vector<PuiseuxPoly>& B, long a, long b,
                             long j) {
  if (static_cast<long>(F.size()) != a + 1) throw std::invalid_argument("recurrence_check: F needs a + 1 coefficients");
  PuiseuxPoly out;
  for (long i = 0; i <= a; ++i) {
    const PuiseuxPoly& Fi = F[static_cast<std::size_t>(i)];
    Rational coef = make_rational((a + b) * i, a) - j;
    if (Fi.is_zero() || coef == 0) continue;
    out += Fi * b_at(B, b, j - i) * coef;
  }
  return out;
}

PuiseuxPoly recurrence_next(const std::vector<PuiseuxPoly>& F, const std::vector<PuiseuxPoly>& B, long a, long b,
                            long j) {
  if (static_cast<long>(F.size()) != a + 1) throw std::invalid_argument("recurrence_next: F needs a + 1 coefficients");
  const PuiseuxPoly& Fa = F[static_cast<std::size_t>(a)];
  if (!Fa.is_monomial()) throw std::invalid_argument("recurrence_next: top coefficient of F must be a monomial");
  if (a + b == j) throw std::invalid_argument("recurrence_next: singular step j = a + b");
  PuiseuxPoly S;
  for (long i = 0; i < a; ++i) {
    const PuiseuxPoly& Fi = F[static_cast<std::size_t>(i)];
    Rational coef = make_rational((a + b) * i, a) - j;
    if (Fi.is_zero() || coef == 0) continue;
    S += Fi * b_at(B, b, j - i) * coef;
  }
  const auto& [fe, fc] = Fa.leading_term();
  PuiseuxPoly quotient = shift_exponents(S, {Rational(-fe.x), Rational(-fe.y)});
  return quotient * Rational(-1 / (fc * (a + b - j)));
}

}  // namespace jacpoly
