#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jacpoly/grading.hpp"
#include "jacpoly/poly.hpp"
#include "jacpoly/series.hpp"

namespace jacpoly {

// c(c-1)...(c-sum+1) / prod m_i!.
Rational multinomial(const Rational& c, const std::vector<long>& ms);
Rational binomial(const Rational& c, long k);

// Sum over k of H^k * terms[k]; negative k are formal.
class HLaurent {
 public:
  HLaurent() = default;
  static HLaurent of(const PuiseuxPoly& p, long power = 0);

  const std::map<long, PuiseuxPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_power() const;
  void add(long power, const PuiseuxPoly& p);

  // H^K times the value, as a polynomial; K must clear every negative power.
  PuiseuxPoly cleared(const PuiseuxPoly& H, long K) const;
  // Exact value when H is a monomial.
  PuiseuxPoly evaluate_monomial(const PuiseuxPoly& H) const;

  friend HLaurent operator+(const HLaurent& a, const HLaurent& b);
  friend HLaurent operator-(const HLaurent& a, const HLaurent& b);
  friend HLaurent operator*(const HLaurent& a, const HLaurent& b);
  friend HLaurent operator*(const Rational& c, const HLaurent& a);
  // Structural equality of the canonical maps.
  bool operator==(const HLaurent& o) const { return terms_ == o.terms_; }

 private:
  std::map<long, PuiseuxPoly> terms_;
};

// Compares value(x) with the polynomial p after clearing denominators.
bool equals_after_clearing(const HLaurent& x, const PuiseuxPoly& p, const PuiseuxPoly& H);

struct HomogeneousRoot {
  long r = 1;
  PuiseuxPoly H;  // H^r = F_d / kappa
  Rational kappa = 1;
};
// Largest r with f^{1/r} a polynomial up to a constant; f w-homogeneous.
HomogeneousRoot homogeneous_root(const PuiseuxPoly& f, const Direction& w);

struct MagnusContext {
  Direction w;
  Rational d, e;
  long r = 1;
  PuiseuxPoly H;
  Rational kappa = 1;  // leading form of F is kappa * H^r; F is used as F / kappa
  HomogeneousDecomposition F_parts, G_parts;
  // P[k][j] = [(sum_{i>=1} F_{d-i} t^i)^j]_{t^k} for F / kappa, filled on demand.
  mutable std::vector<std::vector<PuiseuxPoly>> P;

  const PuiseuxPoly& P_table(long j, long k) const;
  PuiseuxPoly F_part(long i) const;  // (F / kappa)_{d-i}
  PuiseuxPoly G_part(long i) const;  // G_{e-i}
};

MagnusContext make_magnus_context(const PuiseuxPoly& F, const PuiseuxPoly& G, const Direction& w);

// F~^A to order T, where F~ = sum_i (F/kappa)_{d-i} t^i; r*A must be an integer.
BasicTruncSeries<HLaurent> frac_power_expand(const MagnusContext& ctx, const Rational& A, int T);
// Single coefficient [F~^A]_{t^k}.
HLaurent frac_power_coefficient(const MagnusContext& ctx, const Rational& A, long k);

struct MagnusReport {
  Direction w;
  Rational d, e;
  long r = 1;
  PuiseuxPoly H;
  Rational kappa = 1;
  std::vector<Rational> c;
  std::vector<PuiseuxPoly> residuals;  // per mu, after clearing H powers
  std::optional<Rational> lambda;
  std::optional<Rational> c_extended;  // coefficient at mu = d + e - 1
  PuiseuxPoly extended_residual;
  std::optional<Rational> lambda_expected;  // [F/kappa, G] / (n - m)
  bool extended_ok = false;

  bool residuals_zero() const;
};

MagnusReport magnus_solve(const PuiseuxPoly& F, const PuiseuxPoly& G, const Direction& w);
MagnusReport magnus_extended(const PuiseuxPoly& F, const PuiseuxPoly& G);

// R_mu = [(A^a + B)^{b/a}]_{s^mu} for mu = 0..mu_max; polynomials in s by
// ascending coefficients. A(0) != 0 and B(0) = 0.
std::vector<Rational> onevar_rational_power(const std::vector<Rational>& A, const std::vector<Rational>& B,
                                            long a, long b, long mu_max);

// Polynomial in x_0..x_{k-1} with integer (possibly negative) exponents.
class MultiPoly {
 public:
  using Exponent = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);
  static MultiPoly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, MultiPoly a);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

// Negative exponents require a monomial base.
MultiPoly pow(const MultiPoly& f, long k);
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);
Rational evaluate(const MultiPoly& f, const std::vector<Rational>& values);
// Terms whose weight sum_i w_i e_i equals d.
MultiPoly w_weighted_part(const MultiPoly& f, const std::vector<Rational>& w, const Rational& d);
// Two-variable view: variable 0 is x, variable 1 is y.
PuiseuxPoly to_puiseux(const MultiPoly& f);
std::string to_string(const MultiPoly& f);

struct SpecialCaseContext {
  long a = 2, b = 3, n = 2, s = 1;
  Rational d_p, d_zeta;
  std::vector<Rational> w_vec;  // (a, a-1, ..., a-s+1)
  Rational k;
  std::vector<Rational> e_coeffs;  // e_0 .. e_{a+b-1}

  Rational expected_degree(long i) const { return k * (b - i); }
};

// Minimal k with k * w_i >= v_i for every finite v_i (nullopt is -infinity).
Rational minimal_scaling(const std::vector<std::optional<Rational>>& v, const std::vector<Rational>& w);

SpecialCaseContext make_special_case_context(long a, long b, long s, long m, const Rational& d_zeta,
                                             const std::vector<Rational>& e,
                                             const std::vector<std::optional<Rational>>& v);

// h^_{b-i} in x_0..x_{s-1} and rho = p^s / zeta (variable index s).
MultiPoly hhat_poly(const SpecialCaseContext& ctx, long i);
// h^_{b-i} evaluated at x_l = vars[l] and rho = pz_ratio.
Rational weighted_multinomial_h(const SpecialCaseContext& ctx, long i, const std::vector<Rational>& vars,
                                const Rational& pz_ratio);

// Closed form of h*_{b-i} in z_0..z_{s-1} for (y^a + z_{s-1} y^{s-1} + ... + z_0)^{b/a}.
MultiPoly h_star_closed(long a, long b, long s, long i);

// Coefficients of sum_j e_j (q^a + z)^{(b-j)/a} in y, from y^{top} down to y^{low}.
// q and z are ascending in y; the top coefficient of q must be a monomial.
std::map<long, MultiPoly> h_series(long a, long b, const std::vector<Rational>& e, const std::vector<MultiPoly>& q,
                                   const std::vector<MultiPoly>& z, long low);

// (sum_i f_i y^i)^{b/a} from y^{b deg f / a} down to y^{low}; f monic of degree a.
std::map<long, MultiPoly> y_rational_power(const std::vector<MultiPoly>& f, long a, long b, long low);

// sum_{i=0}^a ((a+b)/a i - j) F_i B_{j-i}, with B[k] = B_{b-k}.
PuiseuxPoly recurrence_check(const std::vector<PuiseuxPoly>& F, const std::vector<PuiseuxPoly>& B, long a, long b,
                             long j);
// B_{j-a} from the recurrence; B[k] = B_{b-k} must be known down to B_{j-a+1}.
PuiseuxPoly recurrence_next(const std::vector<PuiseuxPoly>& F, const std::vector<PuiseuxPoly>& B, long a, long b,
                            long j);

}  // namespace jacpoly
