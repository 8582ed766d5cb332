#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacpoly/genfactory.hpp"
#include "jacpoly/grading.hpp"
#include "jacpoly/poly.hpp"
#include "jacpoly/polygeom.hpp"

namespace jacpoly {

struct RootMult {
  Rational alpha;
  long mult = 0;
};

// Leading form written as c x^{pref} T^{t_power} prod (T - alpha_i)^{m_i} remnant(T)
// with T = x^{u/v} y. Roots are nonzero; the remnant is monic with no rational root.
struct FactoredLeadingForm {
  Direction w;
  Rational c;
  Rational x_prefactor_exp;
  long t_power = 0;
  std::vector<RootMult> roots;  // ascending alpha
  std::vector<Rational> remnant;  // ascending coefficients; {1} when fully split

  long multiplicity(const Rational& alpha) const;
  bool fully_split() const { return remnant.size() <= 1; }
  // Expands the factored form back into a polynomial in x and y.
  PuiseuxPoly expand() const;
};

// w = (v, -u) with u >= 0 and v > 0.
FactoredLeadingForm factor_leading_form(const PuiseuxPoly& f, const Direction& w);

// Rational roots of an ascending coefficient list with multiplicities, plus the
// monic cofactor free of rational roots.
std::pair<std::vector<RootMult>, std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs);

// Outward normal of the edge leaving v clockwise, i.e. the edge whose normal
// precedes the other edge's normal counterclockwise.
Direction next_direction(const ConvexPolygon& poly, const RatPoint& v);
Direction next_direction(const PuiseuxPoly& F, const RatPoint& vF);

// Lowest vertex of the face of poly maximizing w.
RatPoint lower_face_vertex(const ConvexPolygon& poly, const Direction& w);

struct WalkState {
  long j = 0;
  PuiseuxPoly F, G, Z;
  long p = 1;
  RatPoint vF, vZ, vG;
  Direction w;
  bool star_holds = false;
  std::optional<FactoredLeadingForm> factored_F;
  std::optional<Rational> chosen_root;
};

// w . vZ < w . vF.
bool star_condition(const WalkState& s);

enum class WalkOutcome { StarFailedCase1, StarFailedCase2, RootIrrational, MaxStepsExceeded, ZeroInner };
std::string to_string(WalkOutcome o);

enum class Orientation { EN, ENMirror, NE };
Orientation parse_orientation(const std::string& s);
std::string to_string(Orientation o);

struct WalkTrace {
  Orientation orientation = Orientation::EN;
  QTuple qt;
  std::vector<WalkState> states;
  WalkOutcome outcome = WalkOutcome::ZeroInner;
  // Case 1: deg_w F + deg_w G - deg_w (1,1), present when the leading forms
  // have nonzero Jacobian.
  std::optional<Rational> certificate;
  bool leading_jacobian_zero = false;
  // Conditions (c) and (d) on the initial vertices.
  bool initially_admissible = false;
  // vG = (b/a) vF held at every state.
  bool vG_tracks = true;
  // Leading form that blocked the walk, for RootIrrational.
  std::optional<PuiseuxPoly> blocking_form;
};

// Applies y -> y + alpha x^{-u/v} to F, G, Z and moves to the lower vertices of
// the w-edges. The state must satisfy star_holds.
WalkState walk_step(const WalkState& s, const Rational& alpha);

// Default step cap, overridden by JACPOLY_MAX_STEPS.
long walk_step_cap();

// F in R_{m,n}, G in R_{bm/a,bn/a}; coordinates in the trace are those of the
// walk, so NE traces live in swapped coordinates.
WalkTrace run_walk(const PuiseuxPoly& F, const PuiseuxPoly& G, const QTuple& qt, Orientation orientation,
                   std::optional<long> max_steps = std::nullopt);

}  // namespace jacpoly
