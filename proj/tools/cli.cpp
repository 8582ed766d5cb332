#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "jacpoly/report.hpp"

namespace jacpoly::cli {

namespace {

struct Request {
  std::string F, G;
  std::optional<long> a, b, m, n;
  std::string w;
  std::optional<int> trunc;
  std::string orientation;
  std::string svg_path, json_path, batch_path;
  bool list = false;
  bool extended = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" reads the polynomial from a file.
PuiseuxPoly load_poly(const std::string& text, const char* name) {
  if (text.empty()) throw std::invalid_argument(std::string("missing -") + name);
  return parse_poly(text.front() == '@' ? read_file(text.substr(1)) : text);
}

long need(const std::optional<long>& v, const char* name) {
  if (!v) throw std::invalid_argument(std::string("missing -") + name);
  return *v;
}

Direction parse_direction(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("-w expects \"u,v\"");
  try {
    return make_direction(std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("-w expects integers \"u,v\", got \"" + text + "\"");
  }
}

// (m, n) from the EN vertex of N0(F) unless given.
std::pair<long, long> corner_of(const PuiseuxPoly& F, const Request& r) {
  if (r.m && r.n) return {*r.m, *r.n};
  RatPoint v = en_vertex(newton_polygon(F, true));
  return {r.m.value_or(to_long(v.x)), r.n.value_or(to_long(v.y))};
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream outf(tmp, std::ios::binary | std::ios::trunc);
    if (!outf) throw std::runtime_error("cannot write " + tmp);
    outf << content;
    if (!outf) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Json hlaurent_json(const HLaurent& h) {
  Json out = Json::object();
  for (const auto& [k, p] : h.terms()) out["H^" + std::to_string(k)] = to_json(p);
  return out;
}

std::vector<SvgItem> walk_frames(const WalkTrace& t) {
  std::vector<SvgItem> items;
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    const auto& s = t.states[i];
    int frame = static_cast<int>(i);
    items.push_back({SvgItem::Kind::Polygon, newton_polygon(s.F, true).vertices, "N0(F)", "black", frame});
    items.push_back({SvgItem::Kind::Polygon, newton_polygon(s.Z, true).vertices, "N0(Z)", "blue", frame});
    items.push_back({SvgItem::Kind::Point, {s.vF}, "vF", "black", frame});
    items.push_back({SvgItem::Kind::Point, {s.vZ}, "vZ", "blue", frame});
  }
  return items;
}

Json dispatch(const std::string& cmd, const Request& r, std::string& svg) {
  if (cmd == "polygon") {
    PuiseuxPoly F = load_poly(r.F, "F");
    std::optional<std::pair<long, long>> mn;
    if (r.m && r.n) mn = std::make_pair(*r.m, *r.n);
    ConvexPolygon n0 = newton_polygon(F, true);
    svg = render_svg({{SvgItem::Kind::Polygon, newton_polygon(F, false).vertices, "N(F)", "black", 0},
                      {SvgItem::Kind::Polygon, n0.vertices, "N0(F)", "gray", 0}});
    return polygon_report(F, mn);
  }
  if (cmd == "pregen") {
    PuiseuxPoly F = load_poly(r.F, "F");
    long a = need(r.a, "a");
    return pregen_report(F, a, pre_generator(F, a), inner_poly(F, a));
  }
  if (cmd == "generator") {
    PuiseuxPoly F = load_poly(r.F, "F");
    auto [m, n] = corner_of(F, r);
    InnerVertexReport rep = inner_vertex_report(F, make_qtuple(need(r.a, "a"), need(r.b, "b"), m, n));
    if (!rep.gen.Z.is_zero())
      svg = render_svg({{SvgItem::Kind::Polygon, newton_polygon(F, true).vertices, "N0(F)", "black", 0},
                        {SvgItem::Kind::Polygon, newton_polygon(rep.gen.Z, true).vertices, "N0(Z)", "blue", 0}});
    return generator_report(rep);
  }
  if (cmd == "magnus") {
    PuiseuxPoly F = load_poly(r.F, "F");
    PuiseuxPoly G = load_poly(r.G, "G");
    if (r.extended) return magnus_report(magnus_extended(F, G), true);
    Direction w = parse_direction(r.w);
    Json out = magnus_report(magnus_solve(F, G, w), false);
    if (r.trunc) {
      MagnusContext ctx = make_magnus_context(F, G, w);
      auto series = frac_power_expand(ctx, make_rational(1, ctx.r), *r.trunc);
      Json arr = Json::array();
      for (int k = 0; k <= series.order(); ++k) arr.push_back(hlaurent_json(series[k]));
      out["root_expansion"] = arr;
    }
    return out;
  }
  if (cmd == "walk") {
    PuiseuxPoly F = load_poly(r.F, "F");
    PuiseuxPoly G = load_poly(r.G, "G");
    auto [m, n] = corner_of(F, r);
    Orientation o = r.orientation.empty() ? (m <= n ? Orientation::EN : Orientation::ENMirror)
                                          : parse_orientation(r.orientation);
    WalkTrace t = run_walk(F, G, make_qtuple(need(r.a, "a"), need(r.b, "b"), m, n), o);
    if (!t.states.empty()) svg = render_svg(walk_frames(t));
    return walk_report(t);
  }
  if (cmd == "region") {
    RegionR reg = make_region(need(r.a, "a"), need(r.b, "b"), need(r.m, "m"), need(r.n, "n"));
    return region_report(reg, r.list);
  }
  if (cmd == "certify") {
    PuiseuxPoly F = load_poly(r.F, "F");
    long m = need(r.m, "m"), n = need(r.n, "n"), a = need(r.a, "a"), b = need(r.b, "b");
    return certify_report(F, m, n, a, certify_T_membership(F, m, n, a, b));
  }
  throw std::invalid_argument("unknown command " + cmd);
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
  std::istringstream lines(read_file(path));
  std::string line;
  int worst = kOk;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    worst = std::max(worst, run_cli(split_command_line(line), out, err));
  }
  return worst;
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (c == ' ' || c == '\t' || c == '\r')) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (quoted) throw std::invalid_argument("unbalanced quote in: " + line);
  if (have) out.push_back(cur);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton polygon and Jacobian pair analysis"};
  app.name("jacpoly");
  Request r;
  app.add_option("--batch", r.batch_path, "Run every command line of a manifest file");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", r.json_path, "Write the report to a file");
    sub->add_option("--svg", r.svg_path, "Write an SVG figure");
  };
  auto add_poly = [&](CLI::App* sub, bool with_g) {
    sub->add_option("-F", r.F, "Polynomial F, or @file");
    if (with_g) sub->add_option("-G", r.G, "Polynomial G, or @file");
  };
  auto add_ints = [&](CLI::App* sub, const std::string& which) {
    if (which.find('a') != std::string::npos) sub->add_option("-a", r.a);
    if (which.find('b') != std::string::npos) sub->add_option("-b", r.b);
    if (which.find('m') != std::string::npos) sub->add_option("-m", r.m);
    if (which.find('n') != std::string::npos) sub->add_option("-n", r.n);
  };

  auto* polygon = app.add_subcommand("polygon", "Newton polygons of F");
  add_poly(polygon, false);
  add_ints(polygon, "mn");
  add_common(polygon);
  auto* pregen = app.add_subcommand("pregen", "Pre-generator Q and F - Q^a");
  add_poly(pregen, false);
  add_ints(pregen, "a");
  add_common(pregen);
  auto* generator = app.add_subcommand("generator", "Generator, innermost polynomial and region flags");
  add_poly(generator, false);
  add_ints(generator, "abmn");
  add_common(generator);
  auto* magnus = app.add_subcommand("magnus", "Magnus coefficients for a Jacobian pair");
  add_poly(magnus, true);
  magnus->add_option("-w", r.w, "Weight \"u,v\"");
  magnus->add_option("--trunc", r.trunc, "Also report the root expansion up to t^T");
  magnus->add_flag("--extended", r.extended, "Extended formula under w = (0,1)");
  add_common(magnus);
  auto* walk = app.add_subcommand("walk", "Decreasing automorphism walk");
  add_poly(walk, true);
  add_ints(walk, "abmn");
  walk->add_option("--orientation", r.orientation, "en, en-mirror or ne");
  add_common(walk);
  auto* region = app.add_subcommand("region", "Lattice points of the narrow region");
  add_ints(region, "abmn");
  region->add_flag("--list", r.list, "List the points");
  add_common(region);
  auto* certify = app.add_subcommand("certify", "Membership in T_{m,n,a}");
  add_poly(certify, false);
  add_ints(certify, "abmn");
  add_common(certify);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "jacpoly: " << e.what() << "\n";
    return kPrecondition;
  }

  try {
    if (!r.batch_path.empty()) return run_batch(r.batch_path, out, err);
    auto subs = app.get_subcommands();
    if (subs.empty()) {
      err << "jacpoly: no command given\n" << app.help();
      return kPrecondition;
    }
    std::string svg;
    Json report = dispatch(subs.front()->get_name(), r, svg);
    std::string text = report.dump(2) + "\n";
    if (!r.json_path.empty()) write_atomic(r.json_path, text);
    else out << text;
    if (!r.svg_path.empty()) {
      if (svg.empty()) throw std::invalid_argument("no figure for this command");
      write_atomic(r.svg_path, svg);
    }
    return kOk;
  } catch (const jacpoly::ParseError& e) {
    err << "jacpoly: parse error at " << e.position() << ": " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "jacpoly: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::domain_error& e) {
    err << "jacpoly: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "jacpoly: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace jacpoly::cli
