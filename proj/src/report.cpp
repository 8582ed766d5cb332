#include "jacpoly/report.hpp"

namespace jacpoly {

namespace {

Json schema(const std::string& command) { return "jacpoly." + command + "/1"; }

Json clauses_json(const std::vector<ClauseResult>& clauses) {
  Json out = Json::array();
  for (const auto& c : clauses) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

Json optional_point(const std::optional<RatPoint>& p) { return p ? to_json(*p) : Json(nullptr); }
Json optional_rational(const std::optional<Rational>& q) { return q ? to_json(*q) : Json(nullptr); }

Json factored_json(const FactoredLeadingForm& f) {
  Json roots = Json::array();
  for (const auto& r : f.roots) roots.push_back({{"alpha", to_json(r.alpha)}, {"mult", r.mult}});
  Json rem = Json::array();
  for (const auto& c : f.remnant) rem.push_back(to_json(c));
  return {{"c", to_json(f.c)},
          {"x_prefactor_exp", to_json(f.x_prefactor_exp)},
          {"t_power", f.t_power},
          {"roots", roots},
          {"remnant", rem}};
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const RatPoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const ConvexPolygon& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices) out.push_back(to_json(v));
  return out;
}

Json to_json(const PuiseuxPoly& f) { return to_string(f); }
Json to_json(const Direction& w) { return Json::array({w.u, w.v}); }

Json to_json(const Tschirnhausen& t) {
  Json e = Json::array();
  for (const auto& c : t.coeffs) e.push_back(to_json(c));
  return {{"degree", t.degree}, {"e", e}, {"text", t.str()}};
}

Json polygon_report(const PuiseuxPoly& f, std::optional<std::pair<long, long>> mn) {
  ConvexPolygon n = newton_polygon(f, false);
  ConvexPolygon n0 = newton_polygon(f, true);
  PickResult pick = pick_area(n0);
  Json out = {{"schema", schema("polygon")},
              {"F", to_json(f)},
              {"ring", f.tag().name()},
              {"newton", to_json(n)},
              {"newton0", to_json(n0)},
              {"en_vertex", to_json(en_vertex(n0))},
              {"ne_vertex", to_json(ne_vertex(n0))},
              {"area", to_json(pick.area)},
              {"interior_points", to_string(pick.interior)},
              {"boundary_points", to_string(pick.boundary)}};
  if (mn) out["rect_membership"] = to_string(rect_membership(f, mn->first, mn->second));
  return out;
}

Json pregen_report(const PuiseuxPoly& F, long a, const PuiseuxPoly& Q, const PuiseuxPoly& inner) {
  return {{"schema", schema("pregen")}, {"F", to_json(F)}, {"a", a}, {"Q", to_json(Q)}, {"inner", to_json(inner)}};
}

Json generator_report(const InnerVertexReport& r) {
  const GeneratorResult& g = r.gen;
  Json e = Json::array();
  for (const auto& c : g.e_list) e.push_back(to_json(c));
  return {{"schema", schema("generator")},
          {"a", g.qt.a},
          {"b", g.qt.b},
          {"m", g.qt.m},
          {"n", g.qt.n},
          {"Q", to_json(g.Q)},
          {"delta", g.delta},
          {"beta", to_json(g.beta)},
          {"W", to_json(g.WF)},
          {"inner", to_json(g.inner)},
          {"e", e},
          {"Z", to_json(g.Z)},
          {"multiple_delta", g.multiple_delta},
          {"structural_ok", g.structural_ok},
          {"mirrored", r.mirrored},
          {"status", r.status},
          {"Z_en", optional_point(r.Z_en)},
          {"Z_ne", optional_point(r.Z_ne)},
          {"inner_en", optional_point(r.inner_en)},
          {"inner_ne", optional_point(r.inner_ne)},
          {"clauses", clauses_json(r.clauses)}};
}

Json magnus_report(const MagnusReport& r, bool extended) {
  Json c = Json::array();
  for (const auto& x : r.c) c.push_back(to_json(x));
  Json res = Json::array();
  for (const auto& x : r.residuals) res.push_back(to_json(x));
  Json out = {{"schema", schema("magnus")},
              {"w", to_json(r.w)},
              {"d", to_json(r.d)},
              {"e", to_json(r.e)},
              {"r", r.r},
              {"H", to_json(r.H)},
              {"kappa", to_json(r.kappa)},
              {"c", c},
              {"residuals", res},
              {"residuals_zero", r.residuals_zero()},
              {"lambda", optional_rational(r.lambda)}};
  if (extended) {
    out["c_extended"] = optional_rational(r.c_extended);
    out["extended_residual"] = to_json(r.extended_residual);
    out["lambda_expected"] = optional_rational(r.lambda_expected);
    out["extended_ok"] = r.extended_ok;
  }
  return out;
}

Json walk_report(const WalkTrace& t) {
  Json states = Json::array();
  for (const auto& s : t.states) {
    Json js = {{"j", s.j},
               {"p", s.p},
               {"F", to_json(s.F)},
               {"G", to_json(s.G)},
               {"Z", to_json(s.Z)},
               {"vF", to_json(s.vF)},
               {"vZ", to_json(s.vZ)},
               {"vG", to_json(s.vG)},
               {"w", to_json(s.w)},
               {"star_holds", s.star_holds},
               {"newton0_F", to_json(newton_polygon(s.F, true))},
               {"newton0_Z", to_json(newton_polygon(s.Z, true))}};
    if (s.factored_F) js["factored_F"] = factored_json(*s.factored_F);
    js["chosen_root"] = optional_rational(s.chosen_root);
    states.push_back(std::move(js));
  }
  Json out = {{"schema", schema("walk")},
              {"orientation", to_string(t.orientation)},
              {"a", t.qt.a},
              {"b", t.qt.b},
              {"m", t.qt.m},
              {"n", t.qt.n},
              {"outcome", to_string(t.outcome)},
              {"steps", t.states.size()},
              {"initially_admissible", t.initially_admissible},
              {"vG_tracks", t.vG_tracks},
              {"leading_jacobian_zero", t.leading_jacobian_zero},
              {"certificate", optional_rational(t.certificate)},
              {"states", states}};
  if (!t.states.empty() && !t.states.back().star_holds)
    out["summary"] = "star fails at j=" + std::to_string(t.states.back().j);
  if (t.blocking_form) out["blocking_form"] = to_json(*t.blocking_form);
  return out;
}

Json region_report(const RegionR& r, bool list) {
  std::vector<RatPoint> pts = lattice_points_in_R(r);
  Json out = {{"schema", schema("region")},
              {"a", r.a},
              {"b", r.b},
              {"m", r.m},
              {"n", r.n},
              {"C", to_json(r.C)},
              {"slope", to_json(r.slope_m)},
              {"count", pts.size()}};
  if (list) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(to_json(p));
    out["points"] = arr;
  }
  return out;
}

Json certify_report(const PuiseuxPoly& f, long m, long n, long a, const TMembershipReport& r) {
  Json bullets = Json::array();
  for (std::size_t i = 0; i < r.bullets.size(); ++i)
    bullets.push_back({{"status", to_string(r.bullets[i])}, {"detail", i < r.details.size() ? r.details[i] : ""}});
  return {{"schema", schema("certify")},
          {"F", to_json(f)},
          {"m", m},
          {"n", n},
          {"a", a},
          {"member", r.member()},
          {"bullets", bullets}};
}

}  // namespace jacpoly
