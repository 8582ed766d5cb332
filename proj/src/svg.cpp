#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "jacpoly/polygeom.hpp"

namespace jacpoly {

namespace {

constexpr double kFrameWidth = 480;
constexpr double kFrameHeight = 360;
constexpr double kMargin = 40;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<SvgItem>& items) {
  std::ostringstream os;
  if (items.empty()) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kFrameWidth)
       << "\" height=\"" << fmt(kFrameHeight) << "\"></svg>\n";
    return os.str();
  }
  // One scale for every frame so stacked frames stay comparable.
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  int frames = 1;
  for (const auto& it : items) {
    frames = std::max(frames, it.frame + 1);
    for (const auto& p : it.points) {
      xmin = std::min(xmin, p.x.get_d());
      xmax = std::max(xmax, p.x.get_d());
      ymin = std::min(ymin, p.y.get_d());
      ymax = std::max(ymax, p.y.get_d());
    }
  }
  double sx = (kFrameWidth - 2 * kMargin) / (xmax - xmin);
  double sy = (kFrameHeight - 2 * kMargin) / (ymax - ymin);
  auto X = [&](const Rational& x) { return kMargin + (x.get_d() - xmin) * sx; };
  auto Y = [&](const Rational& y, int frame) {
    return frame * kFrameHeight + kFrameHeight - kMargin - (y.get_d() - ymin) * sy;
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kFrameWidth)
     << "\" height=\"" << fmt(kFrameHeight * frames) << "\">\n";
  for (int f = 0; f < frames; ++f) {
    os << "<g id=\"frame" << f << "\">\n";
    os << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0, f)) << "\" x2=\"" << fmt(kFrameWidth - 10)
       << "\" y2=\"" << fmt(Y(0, f)) << "\" stroke=\"gray\"/>\n";
    os << "<line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0, f)) << "\" x2=\"" << fmt(X(0))
       << "\" y2=\"" << fmt(f * kFrameHeight + 10) << "\" stroke=\"gray\"/>\n";
    std::map<std::string, bool> labelled;
    for (const auto& it : items) {
      if (it.frame != f) continue;
      const std::string color = escape(it.color);
      switch (it.kind) {
        case SvgItem::Kind::Polygon: {
          os << "<polygon fill=\"none\" stroke=\"" << color << "\" points=\"";
          for (std::size_t i = 0; i < it.points.size(); ++i)
            os << (i ? " " : "") << fmt(X(it.points[i].x)) << "," << fmt(Y(it.points[i].y, f));
          os << "\"/>\n";
          for (const auto& p : it.points) {
            std::string key = to_string(p);
            if (labelled[key]) continue;
            labelled[key] = true;
            os << "<text x=\"" << fmt(X(p.x) + 3) << "\" y=\"" << fmt(Y(p.y, f) - 3)
               << "\" font-size=\"9\">" << escape(key) << "</text>\n";
          }
          break;
        }
        case SvgItem::Kind::Point:
          for (const auto& p : it.points)
            os << "<circle cx=\"" << fmt(X(p.x)) << "\" cy=\"" << fmt(Y(p.y, f)) << "\" r=\"2.5\" fill=\""
               << color << "\"/>\n";
          break;
        case SvgItem::Kind::Line:
          if (it.points.size() >= 2)
            os << "<line x1=\"" << fmt(X(it.points[0].x)) << "\" y1=\"" << fmt(Y(it.points[0].y, f))
               << "\" x2=\"" << fmt(X(it.points[1].x)) << "\" y2=\"" << fmt(Y(it.points[1].y, f))
               << "\" stroke=\"" << color << "\" stroke-dasharray=\"4 2\"/>\n";
          break;
      }
      if (!it.label.empty() && !it.points.empty()) {
        const auto& p = it.points.back();
        os << "<text x=\"" << fmt(X(p.x) + 3) << "\" y=\"" << fmt(Y(p.y, f) + 12) << "\" font-size=\"10\" fill=\""
           << color << "\">" << escape(it.label) << "</text>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace jacpoly
