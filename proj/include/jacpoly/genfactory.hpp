#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacpoly/poly.hpp"
#include "jacpoly/polygeom.hpp"

namespace jacpoly {

struct QTuple {
  long a = 0, b = 0, m = 0, n = 0;
};
// Validates a | m, a | n, gcd(a, b) = 1 and 2 <= a < b.
QTuple make_qtuple(long a, long b, long m, long n);

// z^k + e_{k-2} z^{k-2} + ... + e_0.
struct Tschirnhausen {
  long degree = 1;
  std::vector<Rational> coeffs;  // e_0 .. e_{k-2}

  // Full ascending coefficient list, including the zero subleading and the leading 1.
  std::vector<Rational> ascending() const;
  std::string str() const;
  bool operator==(const Tschirnhausen& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

// Lattice points of Rect_{m/a,n/a} in decreasing order of x + sqrt(2) y.
std::vector<RatPoint> corner_order(long m, long n, long a);
// Same order on the points (i/p, j) of Rect_{M,N}; M must lie on the 1/p grid.
std::vector<RatPoint> corner_order_grid(const Rational& M, long N, long p);

// The unique P with corner (M/delta, N/delta), corner coefficient 1 and
// supp(f - P^delta) avoiding the far corner rectangle. f must have N0(f)
// inside Rect_{M,N} with coefficient 1 at (M,N).
PuiseuxPoly approximate_root(const PuiseuxPoly& f, long delta, const Rational& M, long N);

PuiseuxPoly pre_generator(const PuiseuxPoly& F, long a);
PuiseuxPoly inner_poly(const PuiseuxPoly& F, long a);

struct Decomposition {
  PuiseuxPoly W;
  Tschirnhausen alpha;
  Rational scale = 1;  // f = scale * alpha(W)
};

// One decomposition step f = alpha(P) with deg alpha = delta, if it exists.
// f must have corner coefficient 1.
std::optional<Decomposition> try_decompose_at(const PuiseuxPoly& f, long delta);

// Full decomposition into a principal W (over Q) and alpha in T.
Decomposition decompose_univariate(const PuiseuxPoly& f);

struct GeneratorResult {
  QTuple qt;
  PuiseuxPoly Q;
  long delta = 1;
  Tschirnhausen beta;
  PuiseuxPoly WF;
  PuiseuxPoly inner;
  std::vector<Rational> e_list;  // e_0 .. e_{(a-1)delta-1}
  PuiseuxPoly Z;
  // Another admissible delta succeeded that does not divide the chosen one.
  bool multiple_delta = false;
  // N0(W_F) equals Rect_{m,n} scaled by 1/(a delta).
  bool structural_ok = true;
};

GeneratorResult f_generator(const PuiseuxPoly& F, const QTuple& qt);

struct ClauseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct InnerVertexReport {
  GeneratorResult gen;
  bool mirrored = false;
  std::string status;
  std::optional<RatPoint> Z_en, Z_ne, inner_en, inner_ne;
  std::vector<ClauseResult> clauses;
};

InnerVertexReport inner_vertex_report(const PuiseuxPoly& F, const QTuple& qt);

enum class BulletStatus { Pass, Fail, InnerVanishes, NotApplicable };
std::string to_string(BulletStatus s);

struct TMembershipReport {
  std::vector<BulletStatus> bullets;  // four entries
  std::vector<std::string> details;
  bool member() const;
};

// Membership in T_{m,n,a} (or its fractional extension); b fixes the region.
TMembershipReport certify_T_membership(const PuiseuxPoly& f, long m, long n, long a, long b);

struct NormalizedPair {
  Tschirnhausen alpha;
  PuiseuxPoly W;
};
// alpha given by ascending coefficients and monic.
NormalizedPair tschirnhausen_normalize(const std::vector<Rational>& alpha, const PuiseuxPoly& W);

}  // namespace jacpoly
